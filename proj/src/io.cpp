#include "bsc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bsc {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

// Next meaningful line, trimmed; false at end of input.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        return true;
    }
    return false;
}

std::vector<std::size_t> read_numbers(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::size_t> out;
    long long x;
    while (ss >> x) {
        if (x < 0) throw std::invalid_argument("negative number in: " + line);
        out.push_back(static_cast<std::size_t>(x));
    }
    if (!ss.eof()) throw std::invalid_argument("malformed line: " + line);
    return out;
}

}  // namespace

PermutationList parse_permutations(std::istream& in) {
    PermutationList list;
    bool have_degree = false;
    std::string line;
    while (next_line(in, line)) {
        if (line.rfind("degree", 0) == 0) {
            const auto nums = read_numbers(line.substr(6));
            if (nums.size() != 1 || have_degree || !list.perms.empty())
                throw std::invalid_argument("bad degree header: " + line);
            list.degree = nums[0];
            have_degree = true;
            continue;
        }
        if (line.find('(') != std::string::npos) {
            if (!have_degree) throw std::invalid_argument("cycle notation needs a degree header");
            list.perms.push_back(Permutation::from_cycles(list.degree, line));
            continue;
        }
        const auto nums = read_numbers(line);
        if (!have_degree) {
            list.degree = nums.size();
            have_degree = true;
        }
        if (nums.size() != list.degree) throw std::invalid_argument("permutation has wrong degree: " + line);
        list.perms.emplace_back(std::vector<Point>(nums.begin(), nums.end()));
    }
    if (!have_degree) throw std::invalid_argument("permutation list is empty");
    return list;
}

PermutationList read_permutations(const std::string& path) {
    auto in = open_input(path);
    return parse_permutations(in);
}

std::string format_permutation(const Permutation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.degree(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p[i]);
    }
    return out;
}

std::string write_permutations(const PermutationList& list) {
    std::string out = "degree " + std::to_string(list.degree) + "\n";
    for (const auto& p : list.perms) out += format_permutation(p) + "\n";
    return out;
}

FiniteGroup read_group(const std::string& path) {
    auto list = read_permutations(path);
    return closure(list.degree, std::move(list.perms));
}

FiniteGroup resolve_group(const std::string& spec) {
    const auto colon = spec.find(':');
    if (spec == "m12") return closure(12, groups::mathieu12_generators());
    if (colon != std::string::npos) {
        const auto kind = spec.substr(0, colon);
        const auto nums = read_numbers(spec.substr(colon + 1));
        if (nums.size() == 1) {
            if (kind == "sym") return groups::symmetric(nums[0]);
            if (kind == "alt") return groups::alternating(nums[0]);
            if (kind == "cyclic") return groups::cyclic(nums[0]);
            if (kind == "trivial") return groups::trivial(nums[0]);
        }
    }
    return read_group(spec);
}

std::string write_graph(const Graph& g) {
    std::string out = "graph " + std::to_string(g.n()) + "\n";
    for (Eigen::Index i = 0; i < g.n(); ++i)
        for (Eigen::Index j = i; j < g.n(); ++j)
            if (g.adj(i, j) > 0)
                out += std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(g.adj(i, j)) + "\n";
    return out;
}

std::string write_graph(const BipartiteGraph& g) {
    std::string out = "bipartite " + std::to_string(g.n_in()) + " " + std::to_string(g.n_out()) + "\n";
    for (Eigen::Index i = 0; i < g.n_in(); ++i)
        for (Eigen::Index j = 0; j < g.n_out(); ++j)
            if (g.inc(i, j) > 0)
                out += std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(g.inc(i, j)) + "\n";
    return out;
}

AnyGraph parse_graph(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw std::invalid_argument("graph file is empty");
    std::istringstream header(line);
    std::string kind;
    header >> kind;
    const auto dims = read_numbers(line.substr(kind.size()));

    auto read_entries = [&](auto&& put) {
        while (next_line(in, line)) {
            const auto e = read_numbers(line);
            if (e.size() != 3) throw std::invalid_argument("expected 'i j mult': " + line);
            put(e[0], e[1], static_cast<int>(e[2]));
        }
    };

    if (kind == "graph" && dims.size() == 1) {
        const auto n = static_cast<Eigen::Index>(dims[0]);
        Graph g{Eigen::MatrixXi::Zero(n, n)};
        read_entries([&](std::size_t i, std::size_t j, int m) {
            if (i >= dims[0] || j >= dims[0]) throw std::invalid_argument("graph vertex out of range");
            g.adj(i, j) += m;
            if (i != j) g.adj(j, i) += m;
        });
        return g;
    }
    if (kind == "bipartite" && dims.size() == 2) {
        BipartiteGraph g{Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(dims[0]), static_cast<Eigen::Index>(dims[1]))};
        read_entries([&](std::size_t i, std::size_t j, int m) {
            if (i >= dims[0] || j >= dims[1]) throw std::invalid_argument("bipartite vertex out of range");
            g.inc(i, j) += m;
        });
        return g;
    }
    throw std::invalid_argument("bad graph header: " + line);
}

AnyGraph read_graph(const std::string& path) {
    auto in = open_input(path);
    return parse_graph(in);
}

std::string write_design(const Design& d) {
    std::string out = "design " + std::to_string(d.v) + " " + std::to_string(d.blocks.size()) + "\n";
    for (const auto& b : d.blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(b[i]);
        }
        out += '\n';
    }
    return out;
}

Design parse_design(std::istream& in) {
    std::string line;
    if (!next_line(in, line) || line.rfind("design", 0) != 0) throw std::invalid_argument("missing design header");
    const auto dims = read_numbers(line.substr(6));
    if (dims.size() != 2) throw std::invalid_argument("bad design header: " + line);
    Design d;
    d.v = dims[0];
    while (next_line(in, line)) {
        const auto nums = read_numbers(line);
        PointSet b(nums.begin(), nums.end());
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw std::invalid_argument("repeated point in block");
        for (auto p : b)
            if (p >= d.v) throw std::invalid_argument("block point out of range");
        d.blocks.push_back(std::move(b));
    }
    if (d.blocks.size() != dims[1]) throw std::invalid_argument("design block count differs from header");
    return d;
}

Design read_design(const std::string& path) {
    auto in = open_input(path);
    return parse_design(in);
}

double round_sig(double x, int digits) {
    if (!std::isfinite(x) || x == 0) return x;
    return std::stod(format_sig(x, digits));
}

std::string format_sig(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

}  // namespace bsc
