#include "loops/permact.hpp"

#include <sstream>
#include <unordered_set>

namespace loops {

Perm left_translation(const Loop& q, int x) {
    int n = q.order();
    if (x < 0 || x >= n) throw index_out_of_range(x);
    std::vector<std::uint16_t> img(n);
    for (int y = 0; y < n; ++y) img[y] = static_cast<std::uint16_t>(q.at(x, y));
    return Perm(std::move(img));
}

Perm right_translation(const Loop& q, int x) {
    int n = q.order();
    if (x < 0 || x >= n) throw index_out_of_range(x);
    std::vector<std::uint16_t> img(n);
    for (int y = 0; y < n; ++y) img[y] = static_cast<std::uint16_t>(q.at(y, x));
    return Perm(std::move(img));
}

Perm p_translation(const Loop& q, int x) {
    return compose(left_translation(q, x), right_translation(q, x));
}

std::vector<std::pair<std::string, Perm>> inner_generators(const Loop& q) {
    int n = q.order();
    std::vector<Perm> l, r, linv, rinv;
    l.reserve(n);
    r.reserve(n);
    for (int x = 0; x < n; ++x) {
        l.push_back(left_translation(q, x));
        r.push_back(right_translation(q, x));
        linv.push_back(invert(l.back()));
        rinv.push_back(invert(r.back()));
    }
    std::vector<std::pair<std::string, Perm>> gens;
    for (int x = 0; x < n; ++x)
        gens.emplace_back("T_" + std::to_string(x + 1), compose(r[x], linv[x]));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::string xy = std::to_string(x + 1) + "," + std::to_string(y + 1);
            gens.emplace_back("L_{" + xy + "}",
                              compose(compose(l[x], l[y]), linv[q.at(y, x)]));
            gens.emplace_back("R_{" + xy + "}",
                              compose(compose(r[x], r[y]), rinv[q.at(x, y)]));
        }
    return gens;
}

bool PermGroup::contains(const Perm& p) const {
    for (const auto& e : elements)
        if (e == p) return true;
    return false;
}

PermGroup closure(const std::vector<Perm>& gens, std::size_t cap) {
    PermGroup g;
    g.generators = gens;
    g.degree = gens.empty() ? 1 : gens[0].degree();
    for (const auto& p : gens)
        if (p.degree() != g.degree) throw degree_mismatch();

    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> frontier;
    auto add = [&](Perm p) {
        if (seen.insert(p).second) {
            if (seen.size() > cap) throw size_limit_exceeded(cap);
            frontier.push_back(std::move(p));
        }
    };
    add(Perm::identity(g.degree));
    for (const auto& p : gens) add(p);

    // The generator set of a finite group always closes under BFS
    // products; inverses appear as powers, so no explicit inversion step.
    std::size_t next = 0;
    while (next < frontier.size()) {
        Perm cur = frontier[next++];
        for (const auto& p : gens) add(compose(cur, p));
    }
    g.elements.assign(seen.begin(), seen.end());
    return g;
}

PermGroup mlt_group(const Loop& q, std::size_t cap) {
    std::vector<Perm> gens;
    for (int x = 0; x < q.order(); ++x) {
        gens.push_back(left_translation(q, x));
        gens.push_back(right_translation(q, x));
    }
    return closure(gens, cap);
}

PermGroup inn_group(const Loop& q, std::size_t cap) {
    std::vector<Perm> gens;
    for (auto& [label, p] : inner_generators(q)) gens.push_back(p);
    return closure(gens, cap);
}

std::string cycle_notation(const Perm& p) {
    int n = p.degree();
    std::vector<char> done(n, 0);
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < n; ++i) {
        if (done[i] || p(i) == i) continue;
        any = true;
        out << '(' << i + 1;
        done[i] = 1;
        for (int j = p(i); j != i; j = p(j)) {
            out << ' ' << j + 1;
            done[j] = 1;
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

} // namespace loops
