#include "superjack/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "superjack/error.hpp"

namespace superjack {

namespace {

void validate(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw error(errc::invalid_argument, "partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw error(errc::invalid_argument, "partition parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { validate(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(parts_); }

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts_[i] : 0;
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

bool partition_order_less(const Partition& a, const Partition& b) {
    const int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.parts() > b.parts();  // lexicographically larger comes first
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> parts;
    for (int j = 1; j <= lambda.part(0); ++j) {
        int count = 0;
        for (int i = 0; i < lambda.length(); ++i)
            if (lambda.part(i) >= j) ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

Dominance dominance_compare(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw error(errc::weight_mismatch, "dominance compares partitions of equal weight: |" + to_string(mu) +
                                               "| != |" + to_string(lambda) + "|");
    if (mu == lambda) return Dominance::equal;
    const int len = std::max(mu.length(), lambda.length());
    bool mu_le = true, la_le = true;
    int su = 0, sl = 0;
    for (int i = 0; i < len; ++i) {
        su += mu.part(i);
        sl += lambda.part(i);
        if (su > sl) mu_le = false;
        if (sl > su) la_le = false;
    }
    if (mu_le) return Dominance::less;
    if (la_le) return Dominance::greater;
    return Dominance::incomparable;
}

BoxStats arm_leg(const Partition& lambda, int i, int j) {
    if (i < 1 || i > lambda.length() || j < 1 || j > lambda.part(i - 1))
        throw error(errc::box_outside_diagram,
                    "box (" + std::to_string(i) + "," + std::to_string(j) + ") outside diagram of " + to_string(lambda));
    const Partition conj = conjugate(lambda);
    return BoxStats{lambda.part(i - 1) - j, conj.part(j - 1) - i, j - 1, i - 1};
}

Rational z_lambda(const Partition& lambda) {
    Rational r = 1;
    int i = 0;
    while (i < lambda.length()) {
        const int value = lambda.part(i);
        int mult = 0;
        while (i < lambda.length() && lambda.part(i) == value) {
            ++mult;
            ++i;
        }
        for (int k = 0; k < mult; ++k) r *= value;
        r *= Rational(factorial(mult));
    }
    return r;
}

ThetaFunction b_lambda(const Partition& lambda) {
    const ThetaFunction th = ThetaFunction::theta();
    ThetaFunction r(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i - 1); ++j) {
            const BoxStats s = arm_leg(lambda, i, j);
            r *= (ThetaFunction(s.arm) + th * (s.leg + 1)) / (ThetaFunction(s.arm + 1) + th * s.leg);
        }
    return r;
}

ThetaFunction pochhammer_gen(const ThetaFunction& a, const Partition& lambda) {
    const ThetaFunction th = ThetaFunction::theta();
    ThetaFunction r(1);
    for (int i = 1; i <= lambda.length(); ++i) {
        const ThetaFunction base = a - th * (i - 1);
        for (int k = 0; k < lambda.part(i - 1); ++k) r *= base + ThetaFunction(k);
    }
    return r;
}

bool in_fat_hook(const Partition& lambda, int n, int m) {
    if (n < 0 || m < 0) throw error(errc::invalid_argument, "fat hook parameters must be non-negative");
    return lambda.part(n) <= m;
}

HookProfile east_south(const Partition& lambda, int n, int m) {
    if (!in_fat_hook(lambda, n, m))
        throw error(errc::not_in_fat_hook, to_string(lambda) + " is not in the fat hook H_{" + std::to_string(n) +
                                               "," + std::to_string(m) + "}");
    const Partition conj = conjugate(lambda);
    HookProfile hp;
    hp.east.resize(n);
    hp.south.resize(m);
    for (int i = 0; i < n; ++i) hp.east[i] = std::max(0, lambda.part(i) - m);
    for (int j = 0; j < m; ++j) hp.south[j] = std::max(0, conj.part(j) - n);
    return hp;
}

namespace {

void enumerate_rec(int remaining, int maxpart, std::vector<int>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int k = std::min(remaining, maxpart); k >= 1; --k) {
        stack.push_back(k);
        enumerate_rec(remaining - k, k, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int weight) {
    if (weight < 0) throw error(errc::invalid_argument, "partition weight must be non-negative");
    std::vector<Partition> out;
    std::vector<int> stack;
    enumerate_rec(weight, weight, stack, out);
    if (weight == 0) out = {Partition()};
    return out;
}

std::vector<Partition> enumerate_partitions(int weight, int n, int m) {
    std::vector<Partition> out;
    for (auto& lambda : enumerate_partitions(weight))
        if (in_fat_hook(lambda, n, m)) out.push_back(std::move(lambda));
    return out;
}

std::string to_string(const Partition& lambda) {
    if (lambda.empty()) return "[]";
    std::ostringstream os;
    for (int i = 0; i < lambda.length(); ++i) {
        if (i) os << ",";
        os << lambda.part(i);
    }
    return os.str();
}

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "[]") return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        const std::string tok = s.substr(pos, next - pos);
        try {
            parts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw error(errc::invalid_argument, "malformed partition: \"" + text + "\"");
        }
        pos = next + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const error&) {
        throw error(errc::invalid_argument, "malformed partition: \"" + text + "\"");
    }
}

}  // namespace superjack
