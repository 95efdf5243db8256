#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "loops/cayley.hpp"
#include "loops/errors.hpp"

namespace loops {

/// A permutation of {0..n-1}. Composition follows the right-action
/// (postfix) convention used throughout the loop-theory literature:
/// apply(compose(s, t), x) = apply(t, apply(s, x)), i.e. x(st) = (xs)t.
/// Every permutation equation in this library reads left to right.
class Perm {
public:
    explicit Perm(std::vector<std::uint16_t> images) : img_(std::move(images)) {}

    static Perm identity(int n) {
        std::vector<std::uint16_t> img(n);
        for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint16_t>(i);
        return Perm(std::move(img));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    const std::vector<std::uint16_t>& images() const { return img_; }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    std::vector<std::uint16_t> img_;
};

inline int apply(const Perm& s, int x) { return s(x); }

/// x(st) = (xs)t.
inline Perm compose(const Perm& s, const Perm& t) {
    if (s.degree() != t.degree()) throw degree_mismatch();
    std::vector<std::uint16_t> img(s.degree());
    for (int x = 0; x < s.degree(); ++x)
        img[x] = static_cast<std::uint16_t>(t(s(x)));
    return Perm(std::move(img));
}

inline Perm invert(const Perm& s) {
    std::vector<std::uint16_t> img(s.degree());
    for (int x = 0; x < s.degree(); ++x) img[s(x)] = static_cast<std::uint16_t>(x);
    return Perm(std::move(img));
}

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::size_t h = 1469598103934665603ull;
        for (auto v : p.images()) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// yL_x = xy: row x of the table.
Perm left_translation(const Loop& q, int x);
/// yR_x = yx: column x of the table.
Perm right_translation(const Loop& q, int x);
/// P_x = L_x R_x (equals R_x L_x exactly when the loop is flexible).
Perm p_translation(const Loop& q, int x);

/// Standard generators of Inn(Q): T_x = R_x L_x^-1 for all x, and
/// L_{x,y} = L_x L_y L_{yx}^-1, R_{x,y} = R_x R_y R_{xy}^-1 for all
/// pairs. Labels use 1-based element numbers.
std::vector<std::pair<std::string, Perm>> inner_generators(const Loop& q);

struct PermGroup {
    std::vector<Perm> generators;
    std::vector<Perm> elements;  // materialized closure, identity included
    int degree = 0;

    std::size_t order() const { return elements.size(); }
    bool contains(const Perm& p) const;
};

inline constexpr std::size_t kDefaultClosureCap = 4'000'000;

/// Breadth-first product closure; throws size_limit_exceeded past cap.
PermGroup closure(const std::vector<Perm>& gens, std::size_t cap = kDefaultClosureCap);

PermGroup mlt_group(const Loop& q, std::size_t cap = kDefaultClosureCap);
PermGroup inn_group(const Loop& q, std::size_t cap = kDefaultClosureCap);

/// 1-based cycle notation, e.g. "(1 2 3)(4 5)"; "()" for the identity.
std::string cycle_notation(const Perm& p);

} // namespace loops
