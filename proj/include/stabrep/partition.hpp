#ifndef STABREP_PARTITION_HPP
#define STABREP_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

namespace stabrep {

// Weakly decreasing list of positive integers; empty = empty partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // validates
    static Partition single_row(int k) { return k ? Partition({k}) : Partition(); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const;   // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; } // 0-based, 0 beyond

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    Partition conjugate() const;
    std::string str() const;

private:
    std::vector<int> parts_;
};

struct Bipartition {
    Partition plus;
    Partition minus;

    int total_size() const { return plus.size() + minus.size(); }
    int total_length() const { return plus.length() + minus.length(); }
    Bipartition dual() const { return {minus, plus}; }

    bool operator==(const Bipartition& o) const = default;
    std::string str() const;
};

// Young-diagram containment: inner_i <= outer_i for all i.
bool contains(const Partition& inner, const Partition& outer);

bool contains(const Bipartition& inner, const Bipartition& outer);

// All mu <= lambda such that lambda/mu has at most one cell per column.
// Includes lambda (empty strip) and, when reachable, smaller shapes.
std::vector<Partition> horizontal_strips(const Partition& lambda);

// hs(lambda+, lambda-): horizontal-strip removals on both components.
std::vector<Bipartition> hs_pairs(const Bipartition& b);

// Littlewood-Richardson coefficient c^nu_{lambda,mu}, via enumeration of
// semistandard skew tableaux of shape nu/lambda, content mu, whose reverse
// reading word is a lattice word.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Total order extending componentwise containment: by total size, then
// |lambda+|, then lex on lambda+, then lex on lambda-.
bool refinement_less(const Bipartition& a, const Bipartition& b);
std::vector<Bipartition> containment_refinement(std::vector<Bipartition> bs);

// All partitions of n (any length), then filtered variants.
std::vector<Partition> partitions_of(int n, int max_length = -1);

} // namespace stabrep

#endif
