#include "stabrep/partition.hpp"

#include "stabrep/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stabrep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw IntegrityError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw IntegrityError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const
{
    if (parts_.empty())
        return Partition();
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++c[j];
    return Partition(std::move(c));
}

std::string Partition::str() const
{
    if (parts_.empty())
        return "[]";
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << "]";
    return os.str();
}

std::string Bipartition::str() const
{
    return "(" + plus.str() + "," + minus.str() + ")";
}

bool contains(const Partition& inner, const Partition& outer)
{
    if (inner.length() > outer.length())
        return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i))
            return false;
    return true;
}

bool contains(const Bipartition& inner, const Bipartition& outer)
{
    return contains(inner.plus, outer.plus) && contains(inner.minus, outer.minus);
}

std::vector<Partition> horizontal_strips(const Partition& lambda)
{
    // lambda/mu is a horizontal strip iff mu interlaces lambda:
    // lambda_{i+1} <= mu_i <= lambda_i.
    std::vector<Partition> out;
    std::vector<int> mu(lambda.length());
    auto rec = [&](auto&& self, int i) -> void {
        if (i == lambda.length()) {
            out.emplace_back(std::vector<int>(mu.begin(), mu.begin() + i));
            return;
        }
        int lo = lambda.part(i + 1);
        int hi = lambda.part(i);
        for (int v = hi; v >= lo; --v) {
            mu[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Bipartition> hs_pairs(const Bipartition& b)
{
    std::vector<Bipartition> out;
    for (const auto& p : horizontal_strips(b.plus))
        for (const auto& m : horizontal_strips(b.minus))
            out.push_back({p, m});
    return out;
}

namespace {

// Backtracking enumeration of LR skew tableaux of shape nu/lambda and content
// mu. Cells are filled row by row, left to right; rows weakly increase,
// columns strictly increase, and the reverse reading word stays a lattice
// word (the count of value v never exceeds the count of v-1).
long lr_count(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    int rows = nu.length();
    int vals = mu.length();
    std::vector<std::vector<int>> fill(rows);
    for (int i = 0; i < rows; ++i)
        fill[i].assign(nu.part(i), 0); // 0 marks lambda cells / unfilled
    std::vector<int> remaining(vals + 1, 0);
    for (int v = 1; v <= vals; ++v)
        remaining[v] = mu.part(v - 1);
    std::vector<int> seen(vals + 2, 0); // lattice counts over the reverse reading word

    long count = 0;
    // Iterate cells in reverse reading order: top row to bottom, right to left
    // within a row; that ordering makes the lattice condition checkable online.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < rows; ++i)
        for (int j = nu.part(i) - 1; j >= lambda.part(i); --j)
            cells.emplace_back(i, j);

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[idx];
        for (int v = 1; v <= vals; ++v) {
            if (remaining[v] == 0)
                continue;
            // Lattice: after placing v, #v must stay <= #(v-1).
            if (v > 1 && seen[v] + 1 > seen[v - 1])
                continue;
            // Row weakly increasing: the right neighbor is already placed.
            if (j + 1 < nu.part(i) && fill[i][j + 1] != 0 && fill[i][j + 1] < v)
                continue;
            // Column strictly increasing; a lambda cell above constrains nothing.
            if (i > 0) {
                int above = j < lambda.part(i - 1) ? 0 : fill[i - 1][j];
                if (above != 0 && above >= v)
                    continue;
            }
            fill[i][j] = v;
            --remaining[v];
            ++seen[v];
            self(self, idx + 1);
            fill[i][j] = 0;
            ++remaining[v];
            --seen[v];
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    if (lambda.size() + mu.size() != nu.size())
        return 0;
    if (!contains(lambda, nu) || !contains(mu, nu))
        return 0;
    return lr_count(lambda, mu, nu);
}

bool refinement_less(const Bipartition& a, const Bipartition& b)
{
    if (a.total_size() != b.total_size())
        return a.total_size() < b.total_size();
    // Within a size class, larger plus-side first; compatible with
    // containment since strict containment strictly increases total size.
    if (a.plus.size() != b.plus.size())
        return a.plus.size() > b.plus.size();
    if (a.plus.parts() != b.plus.parts())
        return a.plus.parts() < b.plus.parts();
    return a.minus.parts() < b.minus.parts();
}

std::vector<Bipartition> containment_refinement(std::vector<Bipartition> bs)
{
    std::sort(bs.begin(), bs.end(), refinement_less);
    return bs;
}

std::vector<Partition> partitions_of(int n, int max_length)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_length >= 0 && static_cast<int>(cur.size()) == max_length)
            return;
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

} // namespace stabrep
