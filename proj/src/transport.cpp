#include "combgape/transport.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace combgape::oracles {

namespace {

constexpr double kPivotTol = 1e-11;

double parse_field(const std::string& field, std::size_t lineno) {
    std::size_t begin = field.find_first_not_of(" \t");
    if (begin == std::string::npos) {
        throw std::runtime_error("cost matrix line " + std::to_string(lineno) + ": empty field");
    }
    std::size_t end = field.find_last_not_of(" \t") + 1;
    double value = 0.0;
    const char* first = field.data() + begin;
    const char* last = field.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw std::runtime_error("cost matrix line " + std::to_string(lineno) +
                                 ": cannot parse '" + field + "'");
    }
    return value;
}

}  // namespace

CostMatrix load_cost_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cost matrix: " + path);

    CostMatrix out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        std::vector<double> row;
        std::size_t pos = 0;
        for (;;) {
            const std::size_t comma = line.find(',', pos);
            const std::string field = line.substr(pos, comma - pos);
            row.push_back(parse_field(field, lineno));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (out.n == 0) {
            out.n = row.size();
        } else if (row.size() != out.n) {
            throw std::runtime_error("cost matrix line " + std::to_string(lineno) +
                                     ": ragged row (expected " + std::to_string(out.n) +
                                     " fields, got " + std::to_string(row.size()) + ")");
        }
        for (double c : row) {
            if (!std::isfinite(c) || c < 0.0) {
                throw std::runtime_error("cost matrix line " + std::to_string(lineno) +
                                         ": entries must be finite and nonnegative");
            }
        }
        out.cost.insert(out.cost.end(), row.begin(), row.end());
        out.m += 1;
    }
    if (out.m == 0) throw std::runtime_error("cost matrix is empty: " + path);
    return out;
}

void TransportSpec::validate() const {
    if (m == 0 || n == 0) throw std::invalid_argument("TransportSpec: empty dimensions");
    if (cost.size() != m * n) throw std::invalid_argument("TransportSpec: cost size mismatch");
    if (supply.size() != m || demand.size() != n) {
        throw std::invalid_argument("TransportSpec: supply/demand size mismatch");
    }
    for (double c : cost) {
        if (!std::isfinite(c) || c < 0.0) {
            throw std::invalid_argument("TransportSpec: costs must be finite and nonnegative");
        }
    }
    double total_supply = 0.0;
    double total_demand = 0.0;
    for (double s : supply) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw std::invalid_argument("TransportSpec: supplies must be positive");
        }
        total_supply += s;
    }
    for (double d : demand) {
        if (!(d > 0.0) || !std::isfinite(d)) {
            throw std::invalid_argument("TransportSpec: demands must be positive");
        }
        total_demand += d;
    }
    if (std::fabs(total_supply - total_demand) > kBalanceTol) {
        throw std::invalid_argument("TransportSpec: supply and demand are unbalanced");
    }
}

TransportSolution solve_transport_detailed(const TransportSpec& spec) {
    spec.validate();
    const std::size_t m = spec.m;
    const std::size_t n = spec.n;
    const auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };

    TransportSolution sol;
    sol.plan.assign(m * n, 0.0);
    sol.basic.assign(m * n, 0);
    sol.u.assign(m, 0.0);
    sol.v.assign(n, 0.0);

    // Northwest-corner start. Exactly one index advances per step, so the
    // basis ends with m+n-1 cells; simultaneous exhaustion leaves a
    // degenerate zero-flow basic cell on the next step.
    {
        std::vector<double> s_rem = spec.supply;
        std::vector<double> d_rem = spec.demand;
        std::size_t i = 0;
        std::size_t j = 0;
        for (;;) {
            const double x = std::min(s_rem[i], d_rem[j]);
            sol.plan[idx(i, j)] = x;
            sol.basic[idx(i, j)] = 1;
            s_rem[i] -= x;
            d_rem[j] -= x;
            if (i == m - 1 && j == n - 1) break;
            if (i == m - 1) {
                ++j;
            } else if (j == n - 1) {
                ++i;
            } else if (s_rem[i] <= d_rem[j]) {
                ++i;
            } else {
                ++j;
            }
        }
    }

    std::vector<char> u_known(m), v_known(n);
    std::vector<std::pair<char, std::size_t>> stack;
    std::vector<char> in_cycle(m * n);
    std::vector<std::size_t> row_count(m), col_count(n);
    std::vector<std::size_t> cycle;

    const std::size_t max_pivots = 2000 * (m * n + 1);
    for (;;) {
        // MODI duals: solve u_i + v_j = c_ij over the basis tree, u_0 = 0.
        std::fill(u_known.begin(), u_known.end(), 0);
        std::fill(v_known.begin(), v_known.end(), 0);
        stack.clear();
        u_known[0] = 1;
        sol.u[0] = 0.0;
        stack.emplace_back(1, 0);
        while (!stack.empty()) {
            const auto [is_row, a] = stack.back();
            stack.pop_back();
            if (is_row) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (sol.basic[idx(a, j)] && !v_known[j]) {
                        sol.v[j] = spec.cost[idx(a, j)] - sol.u[a];
                        v_known[j] = 1;
                        stack.emplace_back(0, j);
                    }
                }
            } else {
                for (std::size_t i = 0; i < m; ++i) {
                    if (sol.basic[idx(i, a)] && !u_known[i]) {
                        sol.u[i] = spec.cost[idx(i, a)] - sol.v[a];
                        u_known[i] = 1;
                        stack.emplace_back(1, i);
                    }
                }
            }
        }
        for (char k : u_known) {
            if (!k) throw std::logic_error("transport solver: basis lost tree structure");
        }
        for (char k : v_known) {
            if (!k) throw std::logic_error("transport solver: basis lost tree structure");
        }

        // Entering cell: lowest flat index with negative reduced cost.
        std::size_t enter = m * n;
        for (std::size_t i = 0; i < m && enter == m * n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (sol.basic[idx(i, j)]) continue;
                const double reduced = spec.cost[idx(i, j)] - sol.u[i] - sol.v[j];
                if (reduced < -kPivotTol) {
                    enter = idx(i, j);
                    break;
                }
            }
        }
        if (enter == m * n) break;  // optimal

        if (++sol.pivots > max_pivots) {
            throw std::runtime_error("transport solver: pivot limit exceeded");
        }

        // The unique cycle through the entering cell: strip rows/columns that
        // hold fewer than two marked cells until only the cycle remains.
        std::copy(sol.basic.begin(), sol.basic.end(), in_cycle.begin());
        in_cycle[enter] = 1;
        std::fill(row_count.begin(), row_count.end(), 0);
        std::fill(col_count.begin(), col_count.end(), 0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (in_cycle[idx(i, j)]) {
                    ++row_count[i];
                    ++col_count[j];
                }
            }
        }
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = 0; i < m; ++i) {
                if (row_count[i] != 1) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (in_cycle[idx(i, j)]) {
                        in_cycle[idx(i, j)] = 0;
                        --row_count[i];
                        --col_count[j];
                        changed = true;
                    }
                }
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (col_count[j] != 1) continue;
                for (std::size_t i = 0; i < m; ++i) {
                    if (in_cycle[idx(i, j)]) {
                        in_cycle[idx(i, j)] = 0;
                        --row_count[i];
                        --col_count[j];
                        changed = true;
                    }
                }
            }
        }

        // Walk the cycle from the entering cell, alternating row/column moves;
        // odd positions give up flow.
        cycle.clear();
        std::size_t ci = enter / n;
        std::size_t cj = enter % n;
        bool along_row = true;
        do {
            cycle.push_back(idx(ci, cj));
            if (along_row) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (j != cj && in_cycle[idx(ci, j)]) {
                        cj = j;
                        break;
                    }
                }
            } else {
                for (std::size_t i = 0; i < m; ++i) {
                    if (i != ci && in_cycle[idx(i, cj)]) {
                        ci = i;
                        break;
                    }
                }
            }
            along_row = !along_row;
        } while (idx(ci, cj) != enter);
        if (cycle.size() < 4 || cycle.size() % 2 != 0) {
            throw std::logic_error("transport solver: malformed pivot cycle");
        }

        double theta = std::numeric_limits<double>::infinity();
        std::size_t leave = m * n;
        for (std::size_t pos = 1; pos < cycle.size(); pos += 2) {
            const double f = sol.plan[cycle[pos]];
            if (f < theta || (f == theta && cycle[pos] < leave)) {
                theta = f;
                leave = cycle[pos];
            }
        }

        for (std::size_t pos = 0; pos < cycle.size(); ++pos) {
            if (pos % 2 == 0) {
                sol.plan[cycle[pos]] += theta;
            } else {
                sol.plan[cycle[pos]] -= theta;
            }
        }
        sol.plan[leave] = 0.0;
        sol.basic[enter] = 1;
        sol.basic[leave] = 0;
    }

    sol.cost = 0.0;
    for (std::size_t c = 0; c < m * n; ++c) {
        if (sol.plan[c] < 0.0) {
            if (sol.plan[c] < -1e-9) {
                throw std::logic_error("transport solver: negative flow");
            }
            sol.plan[c] = 0.0;
        }
        sol.plan[c] += 0.0;  // normalize -0.0
        sol.cost += sol.plan[c] * spec.cost[c];
    }
    return sol;
}

std::vector<double> solve_transport(const TransportSpec& spec) {
    return solve_transport_detailed(spec).plan;
}

}
