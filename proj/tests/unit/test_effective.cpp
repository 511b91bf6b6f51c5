#include "sc/effective.hpp"

#include <doctest.h>

#include <random>

using namespace sc;

namespace {

// Global spin flip: Sᶻ → −Sᶻ, S⁺ ↔ S⁻.
SpinPolynomial spin_flipped(const SpinPolynomial& p)
{
    SpinPolynomial r(p.sites());
    for (const auto& [s, c] : p.terms()) {
        std::string f = s;
        int sign = 1;
        for (char& ch : f) {
            if (ch == 'z') sign = -sign;
            else if (ch == '+') ch = '-';
            else if (ch == '-') ch = '+';
        }
        r.add(f, ScalarValue(sign) * c);
    }
    return r;
}

// Moves the operator on position i to position perm[i].
SpinPolynomial permuted(const SpinPolynomial& p, const std::vector<int>& perm)
{
    SpinPolynomial r(p.sites());
    for (const auto& [s, c] : p.terms()) {
        std::string f(s.size(), '1');
        for (std::size_t i = 0; i < s.size(); ++i) f[static_cast<std::size_t>(perm[i])] = s[i];
        r.add(f, c);
    }
    return r;
}

std::vector<Model> sequence_models(std::vector<int>& cycle)
{
    Model m = make_model(ModelChoice::one_band_symmetric, "plaquette");
    auto bond = [&](int a, int b) {
        for (int i = 0; i < static_cast<int>(m.quantum.bonds.size()); ++i) {
            const auto& q = m.quantum.bonds[static_cast<std::size_t>(i)];
            if ((q.a == a && q.b == b) || (q.a == b && q.b == a)) return i;
        }
        throw std::logic_error("missing bond");
    };
    cycle = {bond(0, 1), bond(1, 2), bond(2, 3), bond(3, 0)};
    return {m};
}

}  // namespace

TEST_CASE("spin-string expansion round-trips random coefficient sets")
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9), pick(0, 3);
    const char ops[] = {'1', 'z', '+', '-'};
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            SpinPolynomial p(n);
            for (int k = 0; k < 6; ++k) {
                std::string s;
                for (int i = 0; i < n; ++i) s += ops[pick(rng)];
                p.add(s, ScalarValue(Rational(num(rng), den(rng))));
            }
            CHECK(express_in_spin_basis(to_matrix(p)) == p);
        }
}

TEST_CASE("spin-string algebra reproduces the spin commutators")
{
    SpinPolynomial sp = spin_plus(1, 0), sm = spin_minus(1, 0), z = spin_z(1, 0);
    CHECK(sp * sm - sm * sp == ScalarValue(2) * z);
    CHECK(z * sp - sp * z == sp);
    CHECK(z * z == ScalarValue(Rational(1, 4)) * spin_one(1));
    CHECK(sdots(2, 0, 1) == szsz(2, 0, 1) + sperp(2, 0, 1));
}

TEST_CASE("symmetric-model effective terms respect spin flip and lattice symmetries")
{
    SupportTerms t = conjugation_terms(ModelChoice::one_band_symmetric, 2);
    CHECK(spin_flipped(t.bond) == t.bond);
    CHECK(spin_flipped(t.three_site) == t.three_site);
    CHECK(spin_flipped(t.plaquette) == t.plaquette);
    CHECK(permuted(t.bond, {1, 0}) == t.bond);
    CHECK(permuted(t.three_site, {2, 1, 0}) == t.three_site);
    CHECK(permuted(t.plaquette, {1, 2, 3, 0}) == t.plaquette);
    CHECK(permuted(t.plaquette, {3, 2, 1, 0}) == t.plaquette);
}

TEST_CASE("the field breaks spin-flip symmetry only through the site term")
{
    SupportTerms t = conjugation_terms(ModelChoice::one_band_symmetric, 1);
    CHECK_FALSE(spin_flipped(t.site) == t.site);
    CHECK(spin_flipped(t.bond) == t.bond);
}

TEST_CASE("the literal four cyclic plaquette sequences do not reproduce the pair term")
{
    std::vector<int> cycle;
    Model m = sequence_models(cycle).front();
    SpinPolynomial adjacent = band_polynomial(
        m, [&](const SectorConjugation& c) { return s2_pair_sum(c, sequences_plaquette_pairs(cycle), cycle); });
    SpinPolynomial cyclic = band_polynomial(
        m, [&](const SectorConjugation& c) { return s2_pair_sum(c, sequences_cyclic_c4(cycle), cycle); });
    CHECK(sequences_plaquette_pairs(cycle).size() == 48);
    CHECK(adjacent == reference_term(ModelChoice::one_band_symmetric, 2, "plaquette", "pair"));
    CHECK_FALSE(cyclic == adjacent);
}

TEST_CASE("sequence families have the documented sizes")
{
    CHECK(sequences_c6(0, 1).size() == 6);
    CHECK(sequences_c4(0, 1).size() == 4);
    CHECK(sequences_c24({0, 1, 2, 3}).size() == 24);
    CHECK(sequences_cyclic_c4({0, 1, 2, 3}).size() == 4);
}

TEST_CASE("derivations match the reference tables")
{
    for (ModelChoice m : {ModelChoice::one_band_symmetric, ModelChoice::one_band_general, ModelChoice::falicov_kimball,
                          ModelChoice::three_band})
        for (int order : {1, 2}) {
            CAPTURE(model_choice_name(m));
            CAPTURE(order);
            Derivation d = derive(m, order);
            CHECK(d.all_match());
            for (const auto& t : d.terms) CHECK_MESSAGE(t.match, t.derived.support << "/" << t.derived.term << " " << t.method);
        }
}

TEST_CASE("zero hopping gives an all-zero interaction table")
{
    Model m = make_model(ModelChoice::one_band_symmetric, "bond");
    Derivation d = derive(ModelChoice::one_band_symmetric, 2, {{find_symbol("t")->index, Rational(0)}});
    CHECK(d.all_match());
    for (const auto& t : d.terms)
        if (t.derived.support != "site") CHECK(t.derived.coefficients.is_zero());
}

TEST_CASE("model names parse and unknown names are rejected")
{
    for (ModelChoice m : {ModelChoice::one_band_symmetric, ModelChoice::one_band_general, ModelChoice::falicov_kimball,
                          ModelChoice::three_band})
        CHECK(parse_model_choice(model_choice_name(m)) == m);
    CHECK_THROWS_AS(parse_model_choice("two-band"), std::invalid_argument);
    CHECK_THROWS_AS(derive(ModelChoice::one_band_symmetric, 3), std::invalid_argument);
}

TEST_CASE("three-band J_eff vanishes without hopping")
{
    make_model(ModelChoice::three_band, "cuo2_bond");
    CHECK(jeff_reference().substituted({{find_symbol("tpd")->index, Rational(0)}}).is_zero());
}
