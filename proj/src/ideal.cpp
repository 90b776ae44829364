#include "clutterlab/ideal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace clutterlab {

Monomial Monomial::squarefree(int n, const VertexSet& support) {
    Monomial m(std::vector<int>(n, 0));
    support.for_each([&](int v) { m.exps[v] = 1; });
    return m;
}

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

VertexSet Monomial::support() const {
    VertexSet s(vars());
    for (int v = 0; v < vars(); ++v)
        if (exps[v] > 0) s.set(v);
    return s;
}

bool Monomial::is_squarefree() const {
    for (int e : exps)
        if (e > 1) return false;
    return true;
}

bool Monomial::divides(const Monomial& m) const {
    if (vars() != m.vars()) throw std::invalid_argument("variable count mismatch");
    for (int v = 0; v < vars(); ++v)
        if (exps[v] > m.exps[v]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("variable count mismatch");
    Monomial out = a;
    for (int v = 0; v < b.vars(); ++v) out.exps[v] += b.exps[v];
    return out;
}

Monomial Monomial::quotient(const Monomial& b) const {
    if (!b.divides(*this)) throw std::invalid_argument("inexact monomial quotient");
    Monomial out = *this;
    for (int v = 0; v < vars(); ++v) out.exps[v] -= b.exps[v];
    return out;
}

Monomial Monomial::lcm_with(const Monomial& b) const {
    if (vars() != b.vars()) throw std::invalid_argument("variable count mismatch");
    Monomial out = *this;
    for (int v = 0; v < vars(); ++v) out.exps[v] = std::max(out.exps[v], b.exps[v]);
    return out;
}

std::string Monomial::to_string() const {
    std::string s;
    for (int v = 0; v < vars(); ++v) {
        if (!exps[v]) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(v);
        if (exps[v] > 1) s += "^" + std::to_string(exps[v]);
    }
    return s.empty() ? "1" : s;
}

MonomialIdeal::MonomialIdeal(int vars, std::vector<Monomial> generators) : n(vars) {
    for (const auto& m : generators) {
        if (m.vars() != n) throw std::invalid_argument("generator variable count mismatch");
        if (m.degree() == 0) throw std::invalid_argument("unit generator rejected");
    }
    std::sort(generators.begin(), generators.end(),
              [](const Monomial& a, const Monomial& b) { return b.lex_less(a); });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < generators.size() && !redundant; ++j)
            if (j != i && generators[j].divides(generators[i])) redundant = true;
        if (!redundant) gens.push_back(generators[i]);
    }
}

std::optional<int> MonomialIdeal::degree_pure() const {
    if (gens.empty()) return std::nullopt;
    int d = gens.front().degree();
    for (const auto& m : gens)
        if (m.degree() != d) return std::nullopt;
    return d;
}

bool MonomialIdeal::all_squarefree() const {
    for (const auto& m : gens)
        if (!m.is_squarefree()) return false;
    return true;
}

MonomialIdeal ideal_of_clutter(const Clutter& c) {
    std::vector<Monomial> gens;
    gens.reserve(c.edges.size());
    for (const auto& e : c.edges) gens.push_back(Monomial::squarefree(c.n, e));
    return MonomialIdeal(c.n, std::move(gens));
}

MonomialIdeal connected_ideal(const Graph& g, int r) {
    return ideal_of_clutter(connected_clutter(g, r));
}

MonomialIdeal power(const MonomialIdeal& i, int q) {
    if (q < 1) throw std::invalid_argument("power exponent must be positive");
    if (q == 1 || i.zero()) return i;
    std::vector<Monomial> products;
    // multisets of generator indices
    std::function<void(int, int, Monomial)> recurse = [&](int depth, int from, Monomial acc) {
        if (depth == q) {
            products.push_back(std::move(acc));
            return;
        }
        for (size_t k = from; k < i.gens.size(); ++k) recurse(depth + 1, int(k), acc * i.gens[k]);
    };
    recurse(0, 0, Monomial(std::vector<int>(i.n, 0)));
    return MonomialIdeal(i.n, std::move(products));
}

bool is_member(const MonomialIdeal& i, const Monomial& m) {
    if (m.vars() != i.n) throw std::invalid_argument("variable count mismatch");
    for (const auto& g : i.gens)
        if (g.divides(m)) return true;
    return false;
}

bool is_minimal_generator(const MonomialIdeal& i, const Monomial& m) {
    if (m.vars() != i.n) throw std::invalid_argument("variable count mismatch");
    for (const auto& g : i.gens)
        if (g == m) return true;
    return false;
}

namespace {

struct PrefixHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        uint64_t h = 0xcbf29ce484222325ull;
        for (uint64_t w : v) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return size_t(h);
    }
};

}  // namespace

std::variant<LinearQuotientOrder, LinearQuotientFailure> has_linear_quotients(
    const MonomialIdeal& i, uint64_t budget) {
    if (!i.degree_pure() && !i.zero())
        throw std::invalid_argument("linear quotients requires a pure-degree ideal");
    size_t m = i.gens.size();
    if (m <= 1) {
        LinearQuotientOrder out;
        if (m == 1) out.order.push_back(0);
        return out;
    }

    // sv[j][k]: the single variable x with f_j / gcd(f_j, f_k) = x, else -1
    std::vector<std::vector<int>> sv(m, std::vector<int>(m, -1));
    for (size_t j = 0; j < m; ++j)
        for (size_t k = 0; k < m; ++k) {
            if (j == k) continue;
            int var = -1, total = 0;
            for (int v = 0; v < i.n; ++v) {
                int excess = i.gens[j].exps[v] - std::min(i.gens[j].exps[v], i.gens[k].exps[v]);
                total += excess;
                if (excess > 0) var = v;
            }
            if (total == 1) sv[j][k] = var;
        }

    auto can_append = [&](const std::vector<int>& prefix, int k) {
        for (int idx : prefix) {
            bool covered = false;
            for (int j : prefix) {
                int x = sv[j][k];
                if (x >= 0 && i.gens[idx].exps[x] > i.gens[k].exps[x]) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        return true;
    };

    size_t words = (m + 63) / 64;
    std::unordered_set<std::vector<uint64_t>, PrefixHash> dead;
    std::vector<uint64_t> chosen(words, 0);
    std::vector<int> order;
    uint64_t expansions = 0;
    bool out_of_budget = false;

    std::function<bool()> dfs = [&]() -> bool {
        if (order.size() == m) return true;
        if (dead.count(chosen)) return false;
        if (expansions >= budget) {
            out_of_budget = true;
            return false;
        }
        ++expansions;
        for (size_t k = 0; k < m; ++k) {
            if (chosen[k >> 6] & (uint64_t(1) << (k & 63))) continue;
            if (!can_append(order, int(k))) continue;
            chosen[k >> 6] |= uint64_t(1) << (k & 63);
            order.push_back(int(k));
            if (dfs()) return true;
            order.pop_back();
            chosen[k >> 6] &= ~(uint64_t(1) << (k & 63));
            if (out_of_budget) return false;
        }
        dead.insert(chosen);
        return false;
    };

    if (dfs()) return LinearQuotientOrder{order};
    return LinearQuotientFailure{!out_of_budget, expansions};
}

std::optional<ExchangeWitness> polymatroidal_witness(const MonomialIdeal& i) {
    if (!i.degree_pure() && !i.zero())
        throw std::invalid_argument("exchange axiom requires a pure-degree ideal");
    for (size_t u = 0; u < i.gens.size(); ++u)
        for (size_t v = 0; v < i.gens.size(); ++v) {
            if (u == v) continue;
            for (int a = 0; a < i.n; ++a) {
                if (i.gens[u].exps[a] <= i.gens[v].exps[a]) continue;
                bool swapped = false;
                for (int b = 0; b < i.n && !swapped; ++b) {
                    if (i.gens[u].exps[b] >= i.gens[v].exps[b]) continue;
                    Monomial candidate = i.gens[u];
                    --candidate.exps[a];
                    ++candidate.exps[b];
                    if (is_minimal_generator(i, candidate)) swapped = true;
                }
                if (!swapped) return ExchangeWitness{int(u), int(v), a};
            }
        }
    return std::nullopt;
}

bool is_polymatroidal(const MonomialIdeal& i) { return !polymatroidal_witness(i).has_value(); }

std::optional<WeakExchangeWitness> weakly_polymatroidal_witness(
    const MonomialIdeal& i, const std::vector<int>& var_order) {
    if (!i.degree_pure() && !i.zero())
        throw std::invalid_argument("exchange axiom requires a pure-degree ideal");
    if (int(var_order.size()) != i.n) throw std::invalid_argument("variable order size mismatch");
    for (size_t f = 0; f < i.gens.size(); ++f)
        for (size_t g = 0; g < i.gens.size(); ++g) {
            if (f == g) continue;
            int t = -1;
            for (int p = 0; p < i.n; ++p) {
                int v = var_order[p];
                if (i.gens[f].exps[v] != i.gens[g].exps[v]) {
                    t = p;
                    break;
                }
            }
            if (t < 0) continue;
            int vt = var_order[t];
            if (i.gens[f].exps[vt] <= i.gens[g].exps[vt]) continue;
            bool fixed = false;
            for (int p = t + 1; p < i.n && !fixed; ++p) {
                int vl = var_order[p];
                if (i.gens[g].exps[vl] == 0) continue;
                Monomial candidate = i.gens[g];
                --candidate.exps[vl];
                ++candidate.exps[vt];
                if (is_member(i, candidate)) fixed = true;
            }
            if (!fixed) return WeakExchangeWitness{int(f), int(g), t};
        }
    return std::nullopt;
}

bool is_weakly_polymatroidal(const MonomialIdeal& i, const std::vector<int>& var_order) {
    return !weakly_polymatroidal_witness(i, var_order).has_value();
}

std::vector<int> identity_order(int n) {
    std::vector<int> out(n);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

}  // namespace clutterlab
