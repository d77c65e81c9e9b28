#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bextlab/report.hpp"

namespace bextlab {

// Finite group as a dense Cayley table over indices 0..order-1.
struct FinGroup {
    int order = 1;
    std::vector<int> mul{0};  // mul[a*order + b] = a.b
    int identity = 0;
    std::vector<int> inv{0};
    std::vector<std::string> labels;

    int op(int a, int b) const { return mul[a * order + b]; }
    int inverse(int a) const { return inv[a]; }
    int e() const { return identity; }
    // a^n for n >= 0
    int power(int a, long long n) const;
    int element_order(int a) const;
    bool is_abelian() const;
    std::string label(int a) const;
    bool operator==(const FinGroup& o) const { return order == o.order && mul == o.mul; }
};

// Validates a square table. Throws Error NotAssociative / NoIdentity /
// NoInverse / BadTable.
FinGroup make_group(const std::vector<std::vector<int>>& table,
                    std::optional<int> identity_hint = std::nullopt);

FinGroup cyclic(int n);
// Element (g,h) has index g*|H| + h.
FinGroup direct_product(const FinGroup& G, const FinGroup& H);
FinGroup trivial_group();

struct GroupHom {
    FinGroup dom;
    FinGroup cod;
    std::vector<int> map;

    int operator()(int a) const { return map[a]; }
};

// act[g*|group| + x] = g^x, a right action of `group` on `space`.
struct RightAction {
    FinGroup group;
    FinGroup space;
    std::vector<int> act;

    int operator()(int g, int x) const { return act[g * group.order + x]; }
};

Report check_hom(const GroupHom& f);
Report check_action(const RightAction& a);

RightAction trivial_action(const FinGroup& group, const FinGroup& space);
// Right conjugation g^x = x^-1 g x of a group on itself.
RightAction conjugation_action(const FinGroup& G);

// Brute-force isomorphism search; returns the bijection or nothing.
std::optional<std::vector<int>> find_isomorphism(const FinGroup& G, const FinGroup& H);

// Subgroup generated helpers used by the quotient constructions.
std::vector<int> kernel_elements(const GroupHom& f);
std::vector<int> image_elements(const GroupHom& f);

}  // namespace bextlab
