#include "stabrep/glweights.hpp"

#include "stabrep/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stabrep {

bool DominantWeight::valid() const
{
    for (size_t i = 1; i < entries.size(); ++i)
        if (entries[i] > entries[i - 1])
            return false;
    return true;
}

std::string DominantWeight::str() const
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < entries.size(); ++i)
        os << (i ? "," : "") << entries[i];
    os << ")";
    return os.str();
}

std::string AlgebraicLabel::str() const
{
    return "V_" + std::to_string(rank) + bipartition.str();
}

DominantWeight weight_of(const Bipartition& b, int n)
{
    if (b.total_length() > n)
        throw PreconditionError("rank " + std::to_string(n) + " too small for " + b.str());
    std::vector<int> w(n, 0);
    for (int i = 0; i < b.plus.length(); ++i)
        w[i] = b.plus.part(i);
    for (int i = 0; i < b.minus.length(); ++i)
        w[n - 1 - i] = -b.minus.part(i);
    return {std::move(w)};
}

std::pair<Bipartition, int> normalize_weight(const DominantWeight& w)
{
    if (!w.valid())
        throw PreconditionError("weight is not weakly decreasing");
    // Total length of the bipartition for shift k is #(entries != k), so the
    // minimizers are the modes of the entry multiset.
    std::map<int, int> freq;
    for (int e : w.entries)
        ++freq[e];
    int best_count = 0;
    for (auto [v, c] : freq)
        best_count = std::max(best_count, c);
    int k = 0;
    bool found = false;
    auto consider = [&](int cand) {
        if (freq.count(cand) && freq[cand] == best_count && !found) {
            k = cand;
            found = true;
        }
    };
    consider(0);
    if (!found) {
        int limit = 0;
        for (auto [v, c] : freq)
            limit = std::max(limit, std::abs(v));
        for (int a = 1; a <= limit && !found; ++a) {
            consider(a);
            consider(-a);
        }
        for (auto [v, c] : freq)
            consider(v);
    }
    std::vector<int> plus, minus;
    for (int e : w.entries) {
        if (e > k)
            plus.push_back(e - k);
        else if (e < k)
            minus.push_back(k - e);
    }
    std::reverse(minus.begin(), minus.end());
    return {Bipartition{Partition(std::move(plus)), Partition(std::move(minus))}, k};
}

Int weyl_dimension(const AlgebraicLabel& label)
{
    if (!label.fits())
        throw PreconditionError("label does not name a weight: " + label.str());
    DominantWeight w = weight_of(label.bipartition, label.rank);
    Rat prod(1);
    int n = label.rank;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat factor(w.entries[i] - w.entries[j] + j - i, j - i);
            factor.canonicalize();
            prod *= factor;
        }
    if (!is_integer(prod))
        throw IntegrityError("Weyl dimension did not reduce to an integer");
    return prod.get_num();
}

QPoly dimension_polynomial(const Bipartition& b)
{
    int deg = b.total_size();
    int n0 = std::max(b.total_length(), 1);
    std::vector<Rat> xs, ys;
    for (int n = n0; n <= n0 + deg; ++n) {
        xs.emplace_back(n);
        ys.emplace_back(Rat(weyl_dimension({b, n})));
    }
    return interpolate(xs, ys);
}

std::vector<Branch> pieri_restrict(const AlgebraicLabel& label)
{
    if (!label.fits())
        throw PreconditionError("label does not name a weight: " + label.str());
    if (label.bipartition.total_length() >= label.rank)
        throw PreconditionError("Pieri rule needs total length < rank, got " + label.str());
    std::vector<Branch> out;
    for (const auto& mu : hs_pairs(label.bipartition)) {
        int k = (label.bipartition.plus.size() - mu.plus.size()) -
                (label.bipartition.minus.size() - mu.minus.size());
        out.push_back({{mu, label.rank - 1}, k, 1});
    }
    return out;
}

std::vector<LrTerm> lr_restrict(const AlgebraicLabel& label, int m)
{
    int n = label.rank;
    if (m < 1 || m >= n)
        throw PreconditionError("lr_restrict needs 1 <= m < rank");
    if (!label.fits())
        throw PreconditionError("label does not name a weight: " + label.str());
    // Shift by det^k to reach a polynomial weight.
    int k = label.bipartition.minus.length() > 0 ? label.bipartition.minus.part(0) : 0;
    DominantWeight w = weight_of(label.bipartition, n);
    std::vector<int> nu_parts(w.entries);
    for (int& e : nu_parts)
        e += k;
    Partition nu{std::move(nu_parts)};

    std::vector<LrTerm> out;
    // Enumerate lambda <= nu with length <= m; mu runs over partitions of the
    // complementary size with length <= n - m.
    std::vector<Partition> lambdas;
    {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int row, int maxpart) -> void {
            lambdas.emplace_back(std::vector<int>(cur));
            if (row >= std::min(m, nu.length()))
                return;
            for (int p = std::min(maxpart, nu.part(row)); p >= 1; --p) {
                cur.push_back(p);
                self(self, row + 1, p);
                cur.pop_back();
            }
        };
        rec(rec, 0, nu.size() == 0 ? 1 : nu.size());
    }
    for (const auto& lam : lambdas) {
        int rest = nu.size() - lam.size();
        if (rest < 0)
            continue;
        for (const auto& mu : partitions_of(rest, n - m)) {
            long c = lr_coefficient(lam, mu, nu);
            if (c == 0)
                continue;
            // Undo the det^k twist on each factor; the resulting weight is
            // read off as a bipartition directly (positive vs negative tail).
            auto unshift = [&](const Partition& p, int rank) {
                std::vector<int> plus, minus;
                for (int i = 0; i < rank; ++i) {
                    int e = p.part(i) - k;
                    if (e > 0)
                        plus.push_back(e);
                    else if (e < 0)
                        minus.push_back(-e);
                }
                std::reverse(minus.begin(), minus.end());
                return Bipartition{Partition(std::move(plus)), Partition(std::move(minus))};
            };
            out.push_back({{unshift(lam, m), m}, {unshift(mu, n - m), n - m}, c});
        }
    }
    return out;
}

bool trivial_factor_length_bound(const AlgebraicLabel& label, int m)
{
    return label.bipartition.total_length() <= 2 * m;
}

long unique_copy_check(const Bipartition& b, int m, int n)
{
    if (!(b.total_length() <= m && m < n))
        throw PreconditionError("unique_copy_check needs total length <= m < n");
    long mult = 0;
    for (const auto& t : lr_restrict({b, n}, m))
        if (t.left.bipartition == b && t.right.bipartition == Bipartition{})
            mult += t.multiplicity;
    return mult;
}

} // namespace stabrep
