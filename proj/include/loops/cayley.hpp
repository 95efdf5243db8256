#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "loops/errors.hpp"

namespace loops {

/// A finite loop given by its Cayley table. Element 0 is always the
/// identity; all indices are 0-based internally. Immutable after
/// construction, so values can be shared freely across threads.
class Loop {
public:
    /// Takes a 0-based row-major table and checks the loop axioms:
    /// every row and column a permutation, element 0 a two-sided
    /// identity. Throws the specific violation otherwise.
    Loop(int order, std::vector<int> table, std::string name = "");

    int order() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    int mul(int x, int y) const {
        check_index(x);
        check_index(y);
        return table_[x * n_ + y];
    }

    /// The unique y with x*y = b.
    int ldiv(int x, int b) const {
        check_index(x);
        check_index(b);
        return ldiv_[x * n_ + b];
    }

    /// The unique y with y*x = b.
    int rdiv(int b, int x) const {
        check_index(x);
        check_index(b);
        return rdiv_[x * n_ + b];
    }

    /// The element l with l*x = 1 (inverts x from the left).
    int left_inverse(int x) const { return rdiv(0, x); }

    /// The element r with x*r = 1.
    int right_inverse(int x) const { return ldiv(x, 0); }

    /// Fails loudly when left and right inverses differ; use
    /// has_two_sided_inverses() to probe first.
    int two_sided_inverse(int x) const {
        int l = left_inverse(x);
        if (l != right_inverse(x)) throw no_two_sided_inverse(x);
        return l;
    }

    bool has_two_sided_inverses() const {
        for (int x = 0; x < n_; ++x)
            if (left_inverse(x) != right_inverse(x)) return false;
        return true;
    }

    const std::vector<int>& table() const { return table_; }

    /// Unchecked fast path for inner loops (kernels have already
    /// validated their indices).
    int at(int x, int y) const { return table_[x * n_ + y]; }
    int ldiv_at(int x, int b) const { return ldiv_[x * n_ + b]; }
    int rdiv_at(int b, int x) const { return rdiv_[x * n_ + b]; }

    bool same_table(const Loop& other) const {
        return n_ == other.n_ && table_ == other.table_;
    }

private:
    void check_index(int x) const {
        if (x < 0 || x >= n_) throw index_out_of_range(x);
    }

    int n_;
    std::vector<int> table_;
    std::vector<int> ldiv_;  // ldiv_[x*n+b] = y with x*y = b
    std::vector<int> rdiv_;  // rdiv_[x*n+b] = y with y*x = b
    std::string name_;
};

/// Builds a Loop from a 1-based grid as found in the literature and in
/// `.loop` files. Element 1 must be the identity; it becomes index 0.
Loop validate_table(const std::vector<std::vector<int>>& raw, std::string name = "");

/// Smallest subset containing gens and the identity, closed under
/// mul, ldiv and rdiv. Returned sorted.
std::vector<int> subloop_generated(const Loop& q, const std::vector<int>& gens);

/// Componentwise product on pairs, index (a,b) -> a*n2 + b.
Loop direct_product(const Loop& q1, const Loop& q2);

/// `.loop` text format: optional `# ...` comment lines, then n, then n
/// rows of n space-separated 1-based entries.
Loop parse_loop(std::istream& in, std::string fallback_name = "");
Loop load_loop(const std::string& path);
std::string serialize_loop(const Loop& q);
void save_loop(const Loop& q, const std::string& path);

} // namespace loops
