#include "loops/idents.hpp"

#include <algorithm>
#include <sstream>

namespace loops {

bool is_flexible(const Loop& q) {
    int n = q.order();
    int ok = 1;
#pragma omp parallel for collapse(2) reduction(&& : ok)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            ok = ok && q.at(q.at(x, y), x) == q.at(x, q.at(y, x));
    return ok;
}

bool has_inverse_property(const Loop& q) {
    int n = q.order();
    if (!q.has_two_sided_inverses()) return false;
    std::vector<int> inv(n);
    for (int x = 0; x < n; ++x) inv[x] = q.two_sided_inverse(x);
    int ok = 1;
#pragma omp parallel for collapse(2) reduction(&& : ok)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            ok = ok && q.at(inv[x], q.at(x, y)) == y && q.at(q.at(y, x), inv[x]) == y;
    return ok;
}

bool is_moufang(const Loop& q) {
    int n = q.order();
    int ok = 1;
#pragma omp parallel for collapse(2) reduction(&& : ok)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                ok = ok && q.at(q.at(x, y), q.at(z, x)) ==
                               q.at(x, q.at(q.at(y, z), x));
    return ok;
}

bool is_steiner(const Loop& q) {
    int n = q.order();
    int ok = 1;
#pragma omp parallel for collapse(2) reduction(&& : ok)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            ok = ok && q.at(x, y) == q.at(y, x) && q.at(x, q.at(y, x)) == y;
    return ok;
}

bool is_c_loop(const Loop& q) {
    int n = q.order();
    int ok = 1;
#pragma omp parallel for collapse(2) reduction(&& : ok)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                ok = ok && q.at(x, q.at(y, q.at(y, z))) ==
                               q.at(q.at(q.at(x, y), y), z);
    return ok;
}

bool is_commutative(const Loop& q) {
    int n = q.order();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (q.at(x, y) != q.at(y, x)) return false;
    return true;
}

bool is_associative(const Loop& q) {
    int n = q.order();
    int ok = 1;
#pragma omp parallel for collapse(2) reduction(&& : ok)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                ok = ok && q.at(x, q.at(y, z)) == q.at(q.at(x, y), z);
    return ok;
}

namespace {

bool subset_associative(const Loop& q, const std::vector<int>& s) {
    for (int x : s)
        for (int y : s)
            for (int z : s)
                if (q.at(x, q.at(y, z)) != q.at(q.at(x, y), z)) return false;
    return true;
}

} // namespace

bool is_diassociative(const Loop& q) {
    int n = q.order();
    int ok = 1;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
    for (int x = 0; x < n; ++x) {
        bool local = true;
        for (int y = x; y < n && local; ++y)
            local = subset_associative(q, subloop_generated(q, {x, y}));
        ok = ok && local;
    }
    return ok;
}

bool is_semiautomorphism(const Loop& q, const Perm& theta) {
    int n = q.order();
    if (theta.degree() != n) throw degree_mismatch();
    if (theta(0) != 0) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (theta(q.at(x, q.at(y, x))) !=
                q.at(theta(x), q.at(theta(y), theta(x))))
                return false;
    return true;
}

bool is_semiautomorphic_ip(const Loop& q, std::size_t cap) {
    if (!is_flexible(q) || !has_inverse_property(q)) return false;
    auto gens = inner_generators(q);
    for (auto& [label, p] : gens)
        if (!is_semiautomorphism(q, p)) return false;
    // Semiautomorphisms are not closed under composition a priori, so
    // the definition's "each theta in Inn(Q)" needs the whole group.
    auto inn = inn_group(q, cap);
    int m = static_cast<int>(inn.elements.size());
    int ok = 1;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
    for (int i = 0; i < m; ++i)
        ok = ok && is_semiautomorphism(q, inn.elements[i]);
    return ok;
}

bool check_rif1(const Loop& q) {
    int n = q.order();
    int ok = 1;
#pragma omp parallel for collapse(2) reduction(&& : ok)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int yx = q.at(y, x);
            bool local = true;
            for (int z = 0; z < n; ++z)
                // z L_x P_y R_x = ((y(xz))y)x vs z P_{yx} = ((yx)z)(yx)
                local = local && q.at(q.at(q.at(y, q.at(x, z)), y), x) ==
                                     q.at(q.at(yx, z), yx);
            ok = ok && local;
        }
    return ok;
}

bool check_rif2(const Loop& q) {
    int n = q.order();
    int ok = 1;
#pragma omp parallel for collapse(2) reduction(&& : ok)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = q.at(x, y);
            bool local = true;
            for (int z = 0; z < n; ++z)
                // z R_x P_y L_x = x((y(zx))y) vs z P_{xy} = ((xy)z)(xy)
                local = local && q.at(x, q.at(q.at(y, q.at(z, x)), y)) ==
                                     q.at(q.at(xy, z), xy);
            ok = ok && local;
        }
    return ok;
}

bool check_arif(const Loop& q) {
    if (!is_flexible(q)) throw not_flexible();
    int n = q.order();
    int ok = 1;
#pragma omp parallel for collapse(2) reduction(&& : ok)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xyx = q.at(q.at(x, y), x);
            int yxy = q.at(q.at(y, x), y);
            bool local = true;
            for (int z = 0; z < n; ++z) {
                // R_x R_{yxy} = R_{xyx} R_y
                local = local && q.at(q.at(z, x), yxy) == q.at(q.at(z, xyx), y);
                // L_x L_{yxy} = L_{xyx} L_y
                local = local && q.at(yxy, q.at(x, z)) == q.at(y, q.at(xyx, z));
            }
            ok = ok && local;
        }
    return ok;
}

bool inner_preserve_inverses(const Loop& q, std::size_t cap) {
    int n = q.order();
    if (!has_inverse_property(q)) throw not_ip();
    std::vector<int> inv(n);
    for (int x = 0; x < n; ++x) inv[x] = q.two_sided_inverse(x);
    auto inn = inn_group(q, cap);
    int m = static_cast<int>(inn.elements.size());
    int ok = 1;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
    for (int i = 0; i < m; ++i) {
        const Perm& t = inn.elements[i];
        bool local = true;
        for (int x = 0; x < n; ++x)
            local = local && t(inv[x]) == inv[t(x)];
        ok = ok && local;
    }
    return ok;
}

namespace {

bool commutant_member(const Loop& q, int a) {
    for (int x = 0; x < q.order(); ++x)
        if (q.at(a, x) != q.at(x, a)) return false;
    return true;
}

bool left_nucleus_member(const Loop& q, int a) {
    for (int x = 0; x < q.order(); ++x)
        for (int y = 0; y < q.order(); ++y)
            if (q.at(a, q.at(x, y)) != q.at(q.at(a, x), y)) return false;
    return true;
}

bool middle_nucleus_member(const Loop& q, int a) {
    for (int x = 0; x < q.order(); ++x)
        for (int y = 0; y < q.order(); ++y)
            if (q.at(x, q.at(a, y)) != q.at(q.at(x, a), y)) return false;
    return true;
}

bool right_nucleus_member(const Loop& q, int a) {
    for (int x = 0; x < q.order(); ++x)
        for (int y = 0; y < q.order(); ++y)
            if (q.at(x, q.at(y, a)) != q.at(q.at(x, y), a)) return false;
    return true;
}

bool moufang_member(const Loop& q, int a) {
    for (int x = 0; x < q.order(); ++x)
        for (int y = 0; y < q.order(); ++y) {
            if (q.at(a, q.at(q.at(x, y), a)) != q.at(q.at(a, x), q.at(y, a)))
                return false;
            if (q.at(a, q.at(x, q.at(a, y))) != q.at(q.at(q.at(a, x), a), y))
                return false;
            if (q.at(q.at(q.at(y, a), x), a) != q.at(y, q.at(a, q.at(x, a))))
                return false;
        }
    return true;
}

bool c_element_member(const Loop& q, int a) {
    for (int x = 0; x < q.order(); ++x)
        for (int y = 0; y < q.order(); ++y)
            if (q.at(x, q.at(a, q.at(a, y))) != q.at(q.at(q.at(x, a), a), y))
                return false;
    return true;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

} // namespace

SubsetReport characteristic_subsets(const Loop& q) {
    int n = q.order();
    SubsetReport r;
    std::vector<char> in_c(n), in_nl(n), in_nm(n), in_nr(n), in_m(n), in_c0(n);
#pragma omp parallel for schedule(dynamic)
    for (int a = 0; a < n; ++a) {
        in_c[a] = commutant_member(q, a);
        in_nl[a] = left_nucleus_member(q, a);
        in_nm[a] = middle_nucleus_member(q, a);
        in_nr[a] = right_nucleus_member(q, a);
        in_m[a] = moufang_member(q, a);
        in_c0[a] = c_element_member(q, a);
    }
    for (int a = 0; a < n; ++a) {
        if (in_c[a]) r.commutant.push_back(a);
        if (in_nl[a]) r.nucleus_left.push_back(a);
        if (in_nm[a]) r.nucleus_middle.push_back(a);
        if (in_nr[a]) r.nucleus_right.push_back(a);
        if (in_m[a]) r.moufang_elements.push_back(a);
        if (in_c0[a]) r.c_elements.push_back(a);
    }
    r.nucleus = intersect(intersect(r.nucleus_left, r.nucleus_middle), r.nucleus_right);
    r.center = intersect(r.commutant, r.nucleus);
    return r;
}

bool moufang_element_alt(const Loop& q, int a) {
    int n = q.order();
    if (a < 0 || a >= n) throw index_out_of_range(a);
    for (int x = 0; x < n; ++x) {
        int xax = q.at(q.at(x, a), x);
        for (int y = 0; y < n; ++y)
            if (q.at(q.at(q.at(y, x), a), x) != q.at(y, xax)) return false;
    }
    return true;
}

int power(const Loop& q, int a, int k) {
    if (a < 0 || a >= q.order()) throw index_out_of_range(a);
    if (k < 0) return power(q, q.two_sided_inverse(a), -k);
    int r = 0;
    for (int i = 0; i < k; ++i) r = q.at(a, r);
    return r;
}

int element_order(const Loop& q, int a) {
    if (a < 0 || a >= q.order()) throw index_out_of_range(a);
    int b = a, k = 1;
    while (b != 0) {
        b = q.at(a, b);
        ++k;
    }
    return k;
}

PropertyProfile profile(const Loop& q, std::size_t cap) {
    PropertyProfile p;
    p.flexible = is_flexible(q);
    p.inverse_property = has_inverse_property(q);
    p.semiautomorphic_ip = is_semiautomorphic_ip(q, cap);
    p.rif1 = check_rif1(q);
    p.rif2 = check_rif2(q);
    p.arif = p.flexible ? check_arif(q) : false;
    p.moufang = is_moufang(q);
    p.steiner = is_steiner(q);
    p.c_loop = is_c_loop(q);
    p.diassociative = is_diassociative(q);
    p.commutative = is_commutative(q);
    p.associative = is_associative(q);
    p.subsets = characteristic_subsets(q);
    return p;
}

namespace {

void put_list(std::ostream& out, const std::string& key, const std::vector<int>& s) {
    out << key << "=";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ",";
        out << s[i] + 1;
    }
    out << "\n";
}

} // namespace

std::string format_subsets(const SubsetReport& r) {
    std::ostringstream out;
    put_list(out, "commutant", r.commutant);
    put_list(out, "nucleus_left", r.nucleus_left);
    put_list(out, "nucleus_middle", r.nucleus_middle);
    put_list(out, "nucleus_right", r.nucleus_right);
    put_list(out, "nucleus", r.nucleus);
    put_list(out, "center", r.center);
    put_list(out, "moufang_elements", r.moufang_elements);
    put_list(out, "c_elements", r.c_elements);
    return out.str();
}

std::string format_profile(const PropertyProfile& p) {
    std::ostringstream out;
    auto flag = [&](const char* k, bool v) { out << k << "=" << (v ? "true" : "false") << "\n"; };
    flag("flexible", p.flexible);
    flag("inverse_property", p.inverse_property);
    flag("semiautomorphic_ip", p.semiautomorphic_ip);
    flag("rif1", p.rif1);
    flag("rif2", p.rif2);
    flag("arif", p.arif);
    flag("moufang", p.moufang);
    flag("steiner", p.steiner);
    flag("c_loop", p.c_loop);
    flag("diassociative", p.diassociative);
    flag("commutative", p.commutative);
    flag("associative", p.associative);
    out << format_subsets(p.subsets);
    return out.str();
}

} // namespace loops
