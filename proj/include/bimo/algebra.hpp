#ifndef BIMO_ALGEBRA_HPP
#define BIMO_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bimo/errors.hpp"

namespace bimo {

/// Finite monoid as a multiplication table. table[x][y] = x * y.
struct FiniteMonoid {
    int order = 0;
    std::vector<std::vector<int>> table;
    int identity = 0;

    int product(int x, int y) const { return table[x][y]; }

    nlohmann::ordered_json to_json() const;
};

struct FiniteGroup : FiniteMonoid {
    std::vector<int> inverse;

    int inv(int x) const { return inverse[x]; }
};

/// Subset of a group closed under the product and containing the identity.
struct Submonoid {
    FiniteGroup parent;
    std::vector<int> elements; // sorted

    bool contains(int x) const;
};

/// Validates associativity (witness triple on failure) and locates the
/// identity. Throws NotAssociative, NoIdentity, InvalidArgument.
FiniteMonoid monoid_from_table(const std::vector<std::vector<int>>& table);

/// Additionally checks the Latin-square property and computes inverses.
/// Throws NotAGroup on top of the monoid errors.
FiniteGroup group_from_table(const std::vector<std::vector<int>>& table);

/// Closure of permutations of m points under composition (apply left, then
/// right). Rejects closures larger than max_order with OrderBudgetExceeded.
FiniteGroup group_from_permutation_generators(const std::vector<std::vector<int>>& generators,
                                              int max_order = 5000);

/// Smallest product-closed subset containing seed and the identity. In a
/// finite group this is always a subgroup.
Submonoid submonoid_closure(const FiniteGroup& group, const std::vector<int>& seed);

bool is_cancellative(const FiniteMonoid& m);

/// Ore's condition on ideals: for all a, b the right ideals aM and bM meet.
bool check_ore_condition(const FiniteMonoid& m);

/// The permutation g -> x*g of the element indices.
std::vector<int> left_mult_permutation(const FiniteGroup& group, int x);

std::vector<std::vector<int>> table_from_json(const nlohmann::json& j);

/// Parses "0 2 1" (one-line image form) or "(0 1)(2 3)" (cycle form) into a
/// permutation of m points.
std::vector<int> parse_permutation(const std::string& text, int points);

// Small named groups used throughout tests and examples.
FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group_s3();

} // namespace bimo

#endif
