#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "superjack/theta_function.hpp"

namespace superjack {

// Weakly decreasing sequence of positive integers; the empty partition is
// allowed and indexes the unit in every basis.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    // part i (0-based); 0 beyond the length
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    // multiplicity of the value k among the parts
    int multiplicity(int k) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
};

// Deterministic total order refining dominance: weight first, then parts
// lexicographically descending (so the dominance-largest partition of each
// weight comes first among its peers).
bool partition_order_less(const Partition& a, const Partition& b);

struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const { return partition_order_less(a, b); }
};

Partition conjugate(const Partition& lambda);

enum class Dominance { less, equal, greater, incomparable };

// Requires |mu| = |lambda|; throws errc::weight_mismatch otherwise.
Dominance dominance_compare(const Partition& mu, const Partition& lambda);

// Arm, leg, co-arm, co-leg of the box (i, j), 1-based row/column.
struct BoxStats {
    int arm;
    int leg;
    int coarm;
    int coleg;
};
BoxStats arm_leg(const Partition& lambda, int i, int j);

Rational z_lambda(const Partition& lambda);

// prod over boxes of (a(s) + theta l(s) + theta) / (a(s) + 1 + theta l(s))
ThetaFunction b_lambda(const Partition& lambda);

// prod_i (a - theta (i-1))_{lambda_i}, rising factorials per row
ThetaFunction pochhammer_gen(const ThetaFunction& a, const Partition& lambda);

// lambda_{n+1} <= m
bool in_fat_hook(const Partition& lambda, int n, int m);

// Row/column excesses over the m x n rectangle.
struct HookProfile {
    std::vector<int> east;   // length n
    std::vector<int> south;  // length m
};
HookProfile east_south(const Partition& lambda, int n, int m);

std::vector<Partition> enumerate_partitions(int weight);
std::vector<Partition> enumerate_partitions(int weight, int n, int m);

// "3,1,1" (empty partition prints as "[]")
std::string to_string(const Partition& lambda);
Partition parse_partition(const std::string& text);

}  // namespace superjack
