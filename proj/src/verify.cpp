#include "motivic/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "motivic/idempotents.hpp"

namespace motivic {

int VerificationReport::passed() const {
    int n = 0;
    for (const ClaimResult& c : claims) n += c.pass ? 1 : 0;
    return n;
}

int VerificationReport::failed() const {
    return static_cast<int>(claims.size()) - passed();
}

std::string VerificationReport::json() const {
    nlohmann::json doc;
    doc["suite"] = suite;
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : params) p[k] = v;
    doc["params"] = p;
    doc["claims"] = nlohmann::json::array();
    for (const ClaimResult& c : claims)
        doc["claims"].push_back({{"id", c.id},
                                 {"status", c.pass ? "pass" : "fail"},
                                 {"witness", c.witness}});
    doc["summary"] = {{"passed", passed()}, {"failed", failed()}};
    return doc.dump(2) + "\n";
}

std::string VerificationReport::text() const {
    std::ostringstream out;
    out << "suite " << suite << ": " << passed() << "/" << claims.size() << " claims pass\n";
    for (const auto& [k, v] : params) out << "  param " << k << "=" << v << "\n";
    for (const ClaimResult& c : claims) {
        out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id;
        if (!c.witness.empty()) out << (c.pass ? " (note: " : " (witness: ") << c.witness << ")";
        out << "\n";
    }
    return out.str();
}

namespace {

// Rolls violation counting and the first-witness convention into one place.
struct ClaimTracker {
    std::string id;
    long long checked = 0;
    long long violations = 0;
    std::string first_witness;

    explicit ClaimTracker(std::string claim_id) : id(std::move(claim_id)) {}

    void count(bool ok, const std::string& witness) {
        ++checked;
        if (ok) return;
        ++violations;
        if (first_witness.empty()) first_witness = witness;
    }

    ClaimResult result() const {
        ClaimResult out;
        out.id = id;
        out.pass = violations == 0;
        std::ostringstream text;
        if (violations > 0)
            text << violations << " of " << checked << " checks fail, first: " << first_witness;
        out.witness = text.str();
        return out;
    }
};

void push_param(VerificationReport& rep, const std::string& k, long long v) {
    rep.params.emplace_back(k, std::to_string(v));
}

}  // namespace

VerificationReport verify_lemma_coarse(Fp p, int max_total) {
    validate_prime(p);
    if (max_total < 0) throw std::invalid_argument("verify_lemma_coarse: negative window");
    VerificationReport rep;
    rep.suite = "lemma-coarse";
    push_param(rep, "p", p);
    push_param(rep, "max_total", max_total);

    const Rational slope(p, p - 1);
    ClaimTracker bound("coarse-bound");
    ClaimTracker equality_set("equality-set");
    bool tau0_attains = false;

    for (int t = 0; t <= max_total; ++t)
        for (const Monomial& u : theta_free_monomials(p, t)) {
            Bidegree deg = monomial_bidegree(p, u);
            Rational rhs = slope * Rational(deg.n) + Rational(1);
            bool ok = Rational(deg.m) <= rhs;
            bound.count(ok, u.str() + " at " + deg.str());
            if (Rational(deg.m) == rhs) {
                if (u == tau_gen(0)) tau0_attains = true;
                Monomial tau01 = tau_gen(0);
                tau01.taus |= tau_gen(1).taus;
                equality_set.count(u == tau_gen(0) || u == tau01,
                                   "unexpected equality case " + u.str());
            }
        }

    rep.claims.push_back(bound.result());
    ClaimResult attained;
    attained.id = "equality-at-tau0";
    attained.pass = tau0_attains;
    attained.witness = tau0_attains ? "t0" : "t0 never reaches the bound";
    rep.claims.push_back(attained);
    rep.claims.push_back(equality_set.result());
    return rep;
}

VerificationReport verify_cobar_d2(const AlgebraParams& params, int max_f, int max_total,
                                   int min_weight, int max_weight) {
    validate_prime(params.p);
    VerificationReport rep;
    rep.suite = "cobar-d2";
    rep.params.emplace_back("side", side_name(params.side));
    push_param(rep, "p", params.p);
    push_param(rep, "max_f", max_f);
    push_param(rep, "max_total", max_total);
    push_param(rep, "min_weight", min_weight);
    push_param(rep, "max_weight", max_weight);

    for (int f = 1; f <= max_f; ++f) {
        ClaimTracker zero("d2-zero-f" + std::to_string(f));
        for (int t = 0; t <= max_total; ++t)
            for (int n = min_weight; n <= max_weight; ++n) {
                Tridegree tri{f, {t - n, n}};
                FpMatrix first = differential_matrix(params, tri);
                FpMatrix second = differential_matrix(params, {f + 1, tri.deg});
                zero.count(multiply(second, first).is_zero(), "at " + tri.str());
            }
        rep.claims.push_back(zero.result());
    }
    return rep;
}

VerificationReport verify_cobar_map(Fp p, int max_f, int max_total, int min_weight,
                                    int max_weight) {
    validate_prime(p);
    VerificationReport rep;
    rep.suite = "cobar-map";
    push_param(rep, "p", p);
    push_param(rep, "max_f", max_f);
    push_param(rep, "max_total", max_total);
    push_param(rep, "min_weight", min_weight);
    push_param(rep, "max_weight", max_weight);

    AlgebraParams real{p, Side::Real};
    AlgebraParams c2{p, Side::C2};
    ClaimTracker chain("chain-map");
    ClaimTracker injective("injective");
    ClaimTracker cokernel("cokernel-bound");

    for (int f = 1; f <= max_f; ++f)
        for (int t = 0; t <= max_total; ++t)
            for (int n = min_weight; n <= max_weight; ++n) {
                Tridegree tri{f, {t - n, n}};
                FpMatrix inclusion = comparison_matrix(p, tri);
                FpMatrix next_inclusion = comparison_matrix(p, {f + 1, tri.deg});
                FpMatrix left = multiply(differential_matrix(c2, tri), inclusion);
                FpMatrix right = multiply(next_inclusion, differential_matrix(real, tri));
                chain.count(left == right, "at " + tri.str());
                injective.count(rank(inclusion) == inclusion.cols(), "at " + tri.str());
                for (const CobarWord& w : cokernel_basis(p, tri)) {
                    long long lhs = static_cast<long long>(p - 1) * tri.deg.m;
                    long long rhs = static_cast<long long>(p) * tri.deg.n +
                                    static_cast<long long>(p - 1) * f - (4LL * p - 2);
                    cokernel.count(lhs <= rhs, w.str() + " at " + tri.str());
                }
            }
    rep.claims.push_back(chain.result());
    rep.claims.push_back(injective.result());
    rep.claims.push_back(cokernel.result());
    return rep;
}

VerificationReport verify_ext_map(Fp p, int max_f, int max_total, int min_weight,
                                  int max_weight) {
    validate_prime(p);
    VerificationReport rep;
    rep.suite = "ext-map";
    push_param(rep, "p", p);
    push_param(rep, "max_f", max_f);
    push_param(rep, "max_total", max_total);
    push_param(rep, "min_weight", min_weight);
    push_param(rep, "max_weight", max_weight);

    ClaimTracker iso("iso-above-cut");
    ClaimTracker inj("injective-on-cut");
    for (int f = 0; f <= max_f; ++f)
        for (int t = 0; t <= max_total; ++t)
            for (int n = min_weight; n <= max_weight; ++n) {
                Tridegree tri{f, {t - n, n}};
                long long cut = odd_p_bound(p, tri.deg.n);
                long long position = static_cast<long long>(tri.deg.m) - f;
                if (position < cut) continue;
                ComparisonCell cell = ext_comparison(p, tri);
                if (position > cut)
                    iso.count(cell.verdict == Verdict::Iso,
                              tri.str() + " verdict " + verdict_name(cell.verdict));
                else
                    inj.count(cell.map_rank == cell.source_dim,
                              tri.str() + " rank " + std::to_string(cell.map_rank) + " of " +
                                  std::to_string(cell.source_dim));
            }
    rep.claims.push_back(iso.result());
    rep.claims.push_back(inj.result());
    return rep;
}

VerificationReport verify_uct(const AlgebraParams& params, int max_f, int max_total,
                              int min_weight, int max_weight) {
    validate_prime(params.p);
    if (params.side == Side::Classical)
        throw std::invalid_argument("verify_uct: side must be real or c2");
    VerificationReport rep;
    rep.suite = "uct";
    rep.params.emplace_back("side", side_name(params.side));
    push_param(rep, "p", params.p);
    push_param(rep, "max_f", max_f);
    push_param(rep, "max_total", max_total);
    push_param(rep, "min_weight", min_weight);
    push_param(rep, "max_weight", max_weight);

    ClaimTracker equal("uct-equality");
    for (int f = 0; f <= max_f; ++f)
        for (int t = 0; t <= max_total; ++t)
            for (int n = min_weight; n <= max_weight; ++n) {
                Tridegree tri{f, {t - n, n}};
                int direct = ext_cell(params, tri).dimension();
                int predicted = uct_oracle(params.p, params.side, tri);
                equal.count(direct == predicted,
                            tri.str() + " direct " + std::to_string(direct) + " vs sum " +
                                std::to_string(predicted));
            }
    rep.claims.push_back(equal.result());
    return rep;
}

VerificationReport verify_ranges(Fp max_prime, long long max_n, long long grid) {
    VerificationReport rep;
    rep.suite = "ranges";
    push_param(rep, "max_prime", max_prime);
    push_param(rep, "max_n", max_n);
    push_param(rep, "grid", grid);

    std::vector<Fp> primes;
    for (Fp q = 3; q <= max_prime; q += 2) {
        bool prime = true;
        for (Fp d = 3; d * d <= q; d += 2)
            if (q % d == 0) prime = false;
        if (prime) primes.push_back(q);
    }

    ClaimTracker domination("domination");
    ClaimTracker exceptional("n0-exception");
    for (Fp q : primes) {
        DominationReport positive = check_domination(q, 1, max_n);
        std::ostringstream witness;
        if (!positive.contained()) {
            const auto& e = positive.exceptions.front();
            witness << "p=" << q << " n=" << e.n << " strip [" << e.m_lo << ", " << e.m_hi
                    << "]";
        }
        domination.count(positive.contained(), witness.str());

        DominationReport zero = check_domination(q, 0, 0);
        bool single = zero.exceptions.size() == 1 && zero.exceptions[0].n == 0 &&
                      zero.exceptions[0].m_lo == -5 && zero.exceptions[0].m_hi == -5 &&
                      zero.exceptions_negative_stem;
        exceptional.count(single, "p=" + std::to_string(q));
    }
    rep.claims.push_back(domination.result());
    rep.claims.push_back(exceptional.result());

    RationalRangeReport rational = verify_rational_range(-grid, grid, 0, grid);
    ClaimResult plus_part;
    plus_part.id = "rational-plus-part";
    plus_part.pass = rational.violations.empty();
    if (!plus_part.pass) {
        std::ostringstream w;
        w << "cell (" << rational.violations[0].first << ", " << rational.violations[0].second
          << ") inside the range";
        plus_part.witness = w.str();
    } else {
        plus_part.witness = std::to_string(rational.checked) + " nonzero cells checked";
    }
    rep.claims.push_back(plus_part);

    ClaimResult origin;
    origin.id = "origin-match";
    origin.pass = rational.origin_matches;
    rep.claims.push_back(origin);
    return rep;
}

VerificationReport verify_split() {
    VerificationReport rep;
    rep.suite = "split";

    for (const auto& item : verify_split_identities().items) {
        ClaimResult c;
        c.id = item.name;
        c.pass = item.ok;
        if (item.name == "e_plus^2 = -e_plus" && item.ok)
            c.witness = "sign flag: (eps-1)/2 squares to its own negative, (1-eps)/2 is the idempotent";
        rep.claims.push_back(c);
    }

    ClaimResult ranks;
    ranks.id = "eigenpart-accounting";
    using Row = std::vector<Rational>;
    SplitResult plus_one = split_module({Row{Rational(1)}});
    SplitResult minus_one = split_module({Row{Rational(-1)}});
    SplitResult swap = split_module({Row{Rational(0), Rational(1)},
                                     Row{Rational(1), Rational(0)}});
    ranks.pass = plus_one.plus_rank == 0 && plus_one.minus_rank == 1 &&
                 minus_one.plus_rank == 1 && minus_one.minus_rank == 0 &&
                 swap.plus_rank == 1 && swap.minus_rank == 1;
    if (!ranks.pass) ranks.witness = "sample module ranks disagree";
    rep.claims.push_back(ranks);
    return rep;
}

}  // namespace motivic
