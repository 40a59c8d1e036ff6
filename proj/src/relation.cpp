#include "poramsey/relation.hpp"

#include <stdexcept>
#include <string>

namespace poramsey {

Relation::Relation(int n) : n_(n), bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0)
{
    if (n < 0)
        throw std::invalid_argument("relation size must be non-negative");
}

Relation Relation::from_pairs(int n, std::span<const Pair> pairs)
{
    Relation r(n);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::out_of_range("pair (" + std::to_string(a) + "," + std::to_string(b) + ") outside ground set of size " + std::to_string(n));
        r.insert(a, b);
    }
    return r;
}

std::vector<Pair> Relation::pairs() const
{
    std::vector<Pair> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (contains(a, b))
                out.emplace_back(a, b);
    return out;
}

std::size_t Relation::pair_count() const
{
    std::size_t count = 0;
    for (auto bit : bits_)
        count += bit;
    return count;
}

bool Relation::is_irreflexive() const
{
    for (int a = 0; a < n_; ++a)
        if (contains(a, a))
            return false;
    return true;
}

bool Relation::is_transitive() const
{
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (contains(a, b))
                for (int c = 0; c < n_; ++c)
                    if (contains(b, c) && ! contains(a, c))
                        return false;
    return true;
}

Relation Relation::transitive_closure() const
{
    // Warshall
    Relation r = *this;
    for (int k = 0; k < n_; ++k)
        for (int a = 0; a < n_; ++a)
            if (r.contains(a, k))
                for (int b = 0; b < n_; ++b)
                    if (r.contains(k, b))
                        r.insert(a, b);
    return r;
}

Relation Relation::covering_pairs() const
{
    Relation closed = transitive_closure();
    Relation cover(n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (! closed.contains(a, b))
                continue;
            bool covered = true;
            for (int c = 0; c < n_ && covered; ++c)
                if (c != a && c != b && closed.contains(a, c) && closed.contains(c, b))
                    covered = false;
            if (covered)
                cover.insert(a, b);
        }
    return cover;
}

Relation Relation::induced(std::span<const int> elements) const
{
    const int k = static_cast<int>(elements.size());
    Relation r(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (contains(elements[i], elements[j]))
                r.insert(i, j);
    return r;
}

bool Relation::subset_of(const Relation & other) const
{
    if (other.n_ != n_)
        return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && ! other.bits_[i])
            return false;
    return true;
}

} // namespace poramsey
