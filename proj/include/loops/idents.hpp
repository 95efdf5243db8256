#pragma once

#include <string>
#include <vector>

#include "loops/cayley.hpp"
#include "loops/permact.hpp"

namespace loops {

/// Characteristic subsets of a loop, all sorted, all containing 0.
struct SubsetReport {
    std::vector<int> commutant;        // C(Q)
    std::vector<int> nucleus_left;
    std::vector<int> nucleus_middle;
    std::vector<int> nucleus_right;
    std::vector<int> nucleus;          // N(Q), intersection of the three
    std::vector<int> center;           // Z(Q) = C(Q) n N(Q)
    std::vector<int> moufang_elements; // M(Q)
    std::vector<int> c_elements;       // C0(Q)
};

struct PropertyProfile {
    bool flexible = false;
    bool inverse_property = false;
    bool semiautomorphic_ip = false;
    bool rif1 = false;
    bool rif2 = false;
    bool arif = false;  // evaluated only for flexible loops, false otherwise
    bool moufang = false;
    bool steiner = false;
    bool c_loop = false;
    bool diassociative = false;
    bool commutative = false;
    bool associative = false;
    SubsetReport subsets;
};

// Every checker below scans its identity exhaustively over the whole
// table; nothing is sampled. The hot n^2/n^3 scans run under OpenMP,
// with serial counterparts in loops::ref used as test oracles.

bool is_flexible(const Loop& q);                 // (xy)x = x(yx)
bool has_inverse_property(const Loop& q);        // two-sided inverses + both cancellations
bool is_moufang(const Loop& q);                  // (xy)(zx) = x((yz)x)
bool is_steiner(const Loop& q);                  // xy = yx, x(yx) = y
bool is_c_loop(const Loop& q);                   // x(y(yz)) = ((xy)y)z
bool is_commutative(const Loop& q);
bool is_associative(const Loop& q);
bool is_diassociative(const Loop& q);            // all 2-generated subloops associative

/// 1theta = 1 and (x(yx))theta = xtheta(ytheta * xtheta) for all x,y.
bool is_semiautomorphism(const Loop& q, const Perm& theta);

/// Flexible, IP and every element of Inn(Q) a semiautomorphism. The
/// standard generators are probed first so a failing generator avoids
/// materializing the whole inner mapping group.
bool is_semiautomorphic_ip(const Loop& q, std::size_t cap = kDefaultClosureCap);

/// L_x P_y R_x = P_{yx} for all x,y.
bool check_rif1(const Loop& q);
/// R_x P_y L_x = P_{xy} for all x,y.
bool check_rif2(const Loop& q);

/// R_x R_{yxy} = R_{xyx} R_y and the L dual, with xyx read as (xy)x.
/// Throws not_flexible when the loop is not flexible.
bool check_arif(const Loop& q);

/// (x^-1)theta = (x theta)^-1 for every theta in Inn(Q). Throws not_ip.
bool inner_preserve_inverses(const Loop& q, std::size_t cap = kDefaultClosureCap);

SubsetReport characteristic_subsets(const Loop& q);

/// Moufang-element test in the alternative form (yx*a)x = y(xax);
/// equivalent to a in M(Q) on semiautomorphic IP loops.
bool moufang_element_alt(const Loop& q, int a);

/// a^k with left-nested bracketing a(a(a...)). k may be negative on
/// loops with two-sided inverses.
int power(const Loop& q, int a, int k);
/// Smallest k > 0 with a^k = 1 (left-nested).
int element_order(const Loop& q, int a);

PropertyProfile profile(const Loop& q, std::size_t cap = kDefaultClosureCap);

/// Flat key=value report with stable key order, plus 1-based subset lists.
std::string format_profile(const PropertyProfile& p);
std::string format_subsets(const SubsetReport& r);

/// Serial reference implementations of the parallel kernels above,
/// kept deliberately naive; tests cross-check the two paths.
namespace ref {
bool is_flexible(const Loop& q);
bool is_moufang(const Loop& q);
bool is_c_loop(const Loop& q);
bool is_associative(const Loop& q);
bool check_rif1(const Loop& q);
SubsetReport characteristic_subsets(const Loop& q);
} // namespace ref

} // namespace loops
