#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "clutterlab/clutter.hpp"

namespace clutterlab {

/// Monomial as an exponent vector over variables 0..n-1.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
    static Monomial squarefree(int n, const VertexSet& support);

    int vars() const { return int(exps.size()); }
    int degree() const;
    VertexSet support() const;
    bool is_squarefree() const;
    bool divides(const Monomial& m) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Componentwise difference; requires b | a.
    Monomial quotient(const Monomial& b) const;
    Monomial lcm_with(const Monomial& b) const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    /// Lex order with variable 0 most significant.
    bool lex_less(const Monomial& o) const { return exps < o.exps; }
    std::string to_string() const;
};

/// Monomial ideal stored by its minimal generators (antichain under
/// divisibility, maintained on construction). Generators are kept sorted in
/// descending lex order.
struct MonomialIdeal {
    int n = 0;
    std::vector<Monomial> gens;

    MonomialIdeal() = default;
    explicit MonomialIdeal(int vars) : n(vars) {}
    MonomialIdeal(int vars, std::vector<Monomial> generators);

    bool zero() const { return gens.empty(); }
    /// Common generator degree, when the ideal is nonzero and pure.
    std::optional<int> degree_pure() const;
    bool all_squarefree() const;
};

/// I_r(G): squarefree generators indexed by the edges of 𝒞_r(G).
MonomialIdeal connected_ideal(const Graph& g, int r);

MonomialIdeal ideal_of_clutter(const Clutter& c);

/// Minimal generators of i^q.
MonomialIdeal power(const MonomialIdeal& i, int q);

bool is_member(const MonomialIdeal& i, const Monomial& m);
bool is_minimal_generator(const MonomialIdeal& i, const Monomial& m);

struct LinearQuotientOrder {
    std::vector<int> order;  // indices into gens
};
struct LinearQuotientFailure {
    bool refuted = false;  // full ordering tree exhausted
    uint64_t expansions = 0;
};

/// Searches for a generator order with variable-generated colon ideals.
/// Greedy-first (descending lex), then backtracking over prefix sets within
/// the budget. `refuted` only after the whole tree is explored.
std::variant<LinearQuotientOrder, LinearQuotientFailure> has_linear_quotients(
    const MonomialIdeal& i, uint64_t budget = 2'000'000);

struct ExchangeWitness {
    int u, v;   // generator indices
    int var;    // index where deg(u) exceeds deg(v) with no valid swap
};

/// Exchange axiom, quantified over ordered generator pairs: whenever
/// deg_a(u) > deg_a(v) there is b with deg_b(u) < deg_b(v) and
/// x_b * u / x_a a minimal generator.
std::optional<ExchangeWitness> polymatroidal_witness(const MonomialIdeal& i);
bool is_polymatroidal(const MonomialIdeal& i);

struct WeakExchangeWitness {
    int f, g;
    int position;  // position in var_order where the exchange fails
};

/// Weak exchange under the given variable order (var_order[0] is compared
/// first): at the first discrepancy a_t > b_t there must be a later position
/// l with x_t * g / x_l a member of the ideal.
std::optional<WeakExchangeWitness> weakly_polymatroidal_witness(
    const MonomialIdeal& i, const std::vector<int>& var_order);
bool is_weakly_polymatroidal(const MonomialIdeal& i, const std::vector<int>& var_order);

std::vector<int> identity_order(int n);

}  // namespace clutterlab
