#pragma once

#include "poramsey/linear_order.hpp"
#include "poramsey/relation.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace poramsey {

/// Unvalidated structure data, as read from JSON.
struct RawStructure {
    int p = 1;
    int size = 0;
    std::vector<Pair> partial_order;
    std::vector<std::vector<int>> linear_orders;
    bool hasse = false;
};

enum class StructureErrorKind {
    bad_arity,
    element_out_of_range,
    reflexive_pair,
    cycle,
    not_transitively_closed,
    wrong_order_count,
    not_a_permutation,
    order_does_not_extend
};

const char * to_string(StructureErrorKind kind);

class InvalidStructure : public std::invalid_argument {
public:
    InvalidStructure(StructureErrorKind kind, const std::string & detail);
    StructureErrorKind kind() const { return kind_; }

private:
    StructureErrorKind kind_;
};

/// A finite set {0,...,n-1} with a strict partial order P and p linear orders extending P.
/// Immutable once built; only `validate` constructs one.
class Structure {
public:
    Structure() = default;

    /// Checks every invariant, closing P first when raw.hasse is set.
    /// Throws InvalidStructure naming the first violated invariant.
    static Structure validate(const RawStructure & raw);

    /// n-chain: P = L_0 = ... = L_{p-1} = natural order.
    static Structure chain(int n, int p = 1);
    /// n-antichain: P empty, every L_i natural.
    static Structure antichain(int n, int p = 1);

    int size() const { return size_; }
    int p() const { return static_cast<int>(orders_.size()); }
    const Relation & partial_order() const { return partial_order_; }
    const std::vector<LinearOrder> & linear_orders() const { return orders_; }
    const LinearOrder & order(int i) const { return orders_[static_cast<std::size_t>(i)]; }

    RawStructure raw() const;

    friend bool operator==(const Structure &, const Structure &) = default;

private:
    int size_ = 0;
    Relation partial_order_;
    std::vector<LinearOrder> orders_;
};

/// Restriction to `subset`, relabelled by the unique L_0-increasing bijection onto {0,...,|subset|-1}.
/// Throws std::invalid_argument if `subset` has repeats or leaves the ground set.
Structure restrict(const Structure & s, std::span<const int> subset);

/// f(x) = map[x].
struct Embedding {
    std::vector<int> map;

    friend bool operator==(const Embedding &, const Embedding &) = default;
    friend auto operator<=>(const Embedding &, const Embedding &) = default;
};

/// Image of an embedding, sorted ascending.
struct Copy {
    std::vector<int> elements;

    friend bool operator==(const Copy &, const Copy &) = default;
    friend auto operator<=>(const Copy &, const Copy &) = default;
};

/// Both biconditionals for P and every L_i. Throws PreconditionError when x.p() != y.p()
/// or when f does not map the ground set of x into that of y.
bool is_embedding(const Embedding & f, const Structure & x, const Structure & y);

/// All embeddings x -> y, lexicographic on image sequences.
std::vector<Embedding> enumerate_embeddings(const Structure & x, const Structure & y);

/// All copies of x in z, lexicographic on sorted image sets.
std::vector<Copy> enumerate_copies(const Structure & x, const Structure & z);

/// g o f
Embedding compose(const Embedding & g, const Embedding & f);

Copy image(const Embedding & f);

} // namespace poramsey
