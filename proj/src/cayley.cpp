#include "loops/cayley.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace loops {

Loop::Loop(int order, std::vector<int> table, std::string name)
    : n_(order), table_(std::move(table)), name_(std::move(name)) {
    if (n_ <= 0 || table_.size() != static_cast<std::size_t>(n_) * n_)
        throw not_square();
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            int v = table_[x * n_ + y];
            if (v < 0 || v >= n_) throw entry_out_of_range(x + 1, y + 1, v + 1);
        }
    std::vector<char> seen(n_);
    for (int x = 0; x < n_; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int y = 0; y < n_; ++y) {
            int v = table_[x * n_ + y];
            if (seen[v]) throw latin_row_violation(x);
            seen[v] = 1;
        }
    }
    for (int y = 0; y < n_; ++y) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int x = 0; x < n_; ++x) {
            int v = table_[x * n_ + y];
            if (seen[v]) throw latin_col_violation(y);
            seen[v] = 1;
        }
    }
    for (int x = 0; x < n_; ++x)
        if (table_[x * n_] != x || table_[x] != x) throw no_identity();

    ldiv_.resize(table_.size());
    rdiv_.resize(table_.size());
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            ldiv_[x * n_ + table_[x * n_ + y]] = y;
            rdiv_[y * n_ + table_[x * n_ + y]] = x;
        }
}

Loop validate_table(const std::vector<std::vector<int>>& raw, std::string name) {
    int n = static_cast<int>(raw.size());
    if (n == 0) throw not_square();
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(raw[x].size()) != n) throw not_square();
        for (int y = 0; y < n; ++y) {
            int v = raw[x][y];
            if (v < 1 || v > n) throw entry_out_of_range(x + 1, y + 1, v);
            table.push_back(v - 1);
        }
    }
    return Loop(n, std::move(table), std::move(name));
}

std::vector<int> subloop_generated(const Loop& q, const std::vector<int>& gens) {
    int n = q.order();
    std::vector<char> in(n, 0);
    in[0] = 1;
    std::vector<int> members{0};
    for (int g : gens) {
        if (g < 0 || g >= n) throw index_out_of_range(g);
        if (!in[g]) {
            in[g] = 1;
            members.push_back(g);
        }
    }
    // fixed-point closure under mul and both divisions
    for (bool grew = true; grew;) {
        grew = false;
        std::size_t count = members.size();
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j) {
                int x = members[i], y = members[j];
                for (int v : {q.at(x, y), q.ldiv_at(x, y), q.rdiv_at(y, x)}) {
                    if (!in[v]) {
                        in[v] = 1;
                        members.push_back(v);
                        grew = true;
                    }
                }
            }
    }
    std::sort(members.begin(), members.end());
    return members;
}

Loop direct_product(const Loop& q1, const Loop& q2) {
    int n1 = q1.order(), n2 = q2.order(), n = n1 * n2;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n1; ++c)
                for (int d = 0; d < n2; ++d)
                    table[(a * n2 + b) * n + (c * n2 + d)] =
                        q1.at(a, c) * n2 + q2.at(b, d);
    std::string name;
    if (!q1.name().empty() && !q2.name().empty())
        name = q1.name() + "x" + q2.name();
    return Loop(n, std::move(table), std::move(name));
}

Loop parse_loop(std::istream& in, std::string fallback_name) {
    std::string name = std::move(fallback_name);
    std::string line;
    int n = -1;
    std::vector<std::vector<int>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') {
            auto pos = line.find("name:");
            if (pos != std::string::npos) {
                std::string v = line.substr(pos + 5);
                v.erase(0, v.find_first_not_of(" \t"));
                if (!v.empty()) name = v;
            }
            continue;
        }
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n) || n <= 0) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) {
                    n = -1;
                    continue;
                }
                throw parse_error("expected loop order on first data line");
            }
            continue;
        }
        std::vector<int> row;
        int v;
        while (ss >> v) row.push_back(v);
        if (row.empty()) continue;
        rows.push_back(std::move(row));
        if (static_cast<int>(rows.size()) == n) break;
    }
    if (n < 0 || static_cast<int>(rows.size()) != n)
        throw parse_error("truncated .loop file");
    return validate_table(rows, std::move(name));
}

Loop load_loop(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    std::string base = path;
    auto slash = base.find_last_of('/');
    if (slash != std::string::npos) base = base.substr(slash + 1);
    auto dot = base.rfind(".loop");
    if (dot != std::string::npos) base = base.substr(0, dot);
    return parse_loop(in, base);
}

std::string serialize_loop(const Loop& q) {
    std::ostringstream out;
    if (!q.name().empty()) out << "# name: " << q.name() << "\n";
    int n = q.order();
    out << n << "\n";
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (y) out << ' ';
            out << q.at(x, y) + 1;
        }
        out << "\n";
    }
    return out.str();
}

void save_loop(const Loop& q, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write " + path);
    out << serialize_loop(q);
}

} // namespace loops
