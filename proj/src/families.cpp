#include "mtlab/families.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>

#include "mtlab/arith.hpp"

namespace mtlab {

char const * to_string(Family f)
{
    switch (f) {
        case Family::Main1: return "Main1";
        case Family::Main2: return "Main2";
        case Family::Main3: return "Main3";
        case Family::Main4: return "Main4";
    }
    return "Main1";
}

std::optional<Family> family_from_string(std::string_view s)
{
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "main1")
        return Family::Main1;
    if (lower == "main2")
        return Family::Main2;
    if (lower == "main3")
        return Family::Main3;
    if (lower == "main4")
        return Family::Main4;
    return std::nullopt;
}

char const * to_string(KMCondition c)
{
    switch (c) {
        case KMCondition::C1: return "C1";
        case KMCondition::C2: return "C2";
        case KMCondition::C3: return "C3";
        case KMCondition::None: return "None";
    }
    return "None";
}

char const * to_string(ClaimStatus c)
{
    switch (c) {
        case ClaimStatus::Holds: return "true";
        case ClaimStatus::Fails: return "false";
        case ClaimStatus::NotEvaluated: return "NotEvaluated";
    }
    return "NotEvaluated";
}

namespace {

long mod_small(BigInt const & x, unsigned long m)
{
    return static_cast<long>(mpz_fdiv_ui(x.get_mpz_t(), m));
}

bool congruent(BigInt const & x, BigInt const & y, unsigned long m)
{
    return mod_small(x - y, m) == 0;
}

}  // namespace

KMParams km_conditions(BigInt const & u, BigInt const & w)
{
    BigInt g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t());
    if (g != 1)
        throw usage_error("km_conditions: u and w must be coprime");
    KMParams p;
    p.u = u;
    p.w = w;
    p.d = 4 * u * w * w * w - 27 * u * u;
    p.d_nonsquare = sgn(p.d) < 0 || !int_sqrt(p.d).exact;

    if (mod_small(w, 3) != 0) {
        p.condition = KMCondition::C1;
        return p;
    }
    bool const uw_is_3 = mod_small(u * w, 9) == 3;
    auto near = [&](unsigned long m) {
        return congruent(u, w + 1, m) || congruent(u, w - 1, m);
    };
    if (!uw_is_3 && near(9))
        p.condition = KMCondition::C2;
    else if (uw_is_3 && near(27))
        p.condition = KMCondition::C3;
    return p;
}

bool kishi_check(std::uint64_t k, std::uint64_t n)
{
    if (k == 0 || n == 0)
        return false;
    if (k == 2 && n == 3)
        return false;
    return pow_ui(BigInt(2), 2 * k) < pow_ui(BigInt(3), n);
}

bool ankeny_chowla_check(std::uint64_t M, std::uint64_t n, SquarefreeStatus const & sf)
{
    return n >= 1 && M >= 5 && sf.is_squarefree();
}

bool murty_check(std::uint64_t M, std::uint64_t n, SquarefreeStatus const & sf)
{
    if (!sf.is_squarefree() || n == 0)
        return false;
    if (M >= 5 && M % 2 == 1)
        return true;
    return M == 3 && n % 2 == 1;
}

namespace {

BigInt big(std::uint64_t v)
{
    return from_u64(v);
}

void guard_bits(long double estimate, unsigned max_bits, char const * who)
{
    if (estimate > static_cast<long double>(max_bits) + 8)
        throw usage_error(std::string(who) + ": delta would exceed the " + std::to_string(max_bits) +
                          "-bit guard");
}

void guard_exact_bits(BigInt const & delta, unsigned max_bits, char const * who)
{
    if (bit_length(delta) > max_bits)
        throw usage_error(std::string(who) + ": delta exceeds the " + std::to_string(max_bits) +
                          "-bit guard");
}

/// Factorization of value = sign * prod(part_i ^ k_i) assembled from the
/// factorizations of the parts.
FactoredInt combine(BigInt const & value, std::vector<std::pair<FactoredInt const *, unsigned long>> const & parts)
{
    std::map<BigInt, unsigned long> exps;
    BigInt cofactor = 1;
    for (auto const & [f, k] : parts) {
        for (auto const & pp : f->factors())
            exps[pp.prime] += pp.exponent * k;
        cofactor *= pow_ui(f->cofactor(), k);
    }
    std::vector<PrimePower> out;
    for (auto const & [p, e] : exps)
        out.push_back({p, static_cast<unsigned>(e)});
    FactoredInt res(value, std::move(out), cofactor);
    if (res.product() != abs(value))
        throw std::logic_error("combined factorization does not reproduce the discriminant");
    return res;
}

/// Discriminant of Q(sqrt(n)) from a complete factorization of n; nullopt
/// when the factorization is incomplete or n is a square.
std::optional<BigInt> field_discriminant(FactoredInt const & f)
{
    if (!f.complete())
        return std::nullopt;
    BigInt core = sgn(f.value()) < 0 ? -1 : 1;
    for (auto const & pp : f.factors()) {
        if (pp.exponent % 2 == 1)
            core *= pp.prime;
    }
    if (core == 1)
        return std::nullopt;
    return mod_small(core, 4) == 1 ? core : BigInt(4 * core);
}

void attach_class_number(FamilyRecord & r, AnalysisOptions const & opts, bool probe)
{
    if (!r.D)
        return;
    BigInt const & D = *r.D;
    BigInt const limit = BigInt(1) << 62;
    if (abs(D) >= limit) {
        r.h_note = "|D| outside the supported range 2^62";
        return;
    }
    std::int64_t const d = to_i64(D);
    if (d < 0) {
        if (-d > opts.imaginary_fast_limit && !opts.slow) {
            r.slow_skipped = true;
            r.h_note = "|D| = " + std::to_string(-d) + " needs --slow";
            return;
        }
        bool const want_probe = probe && opts.probe_order_bound > 0 && -d <= opts.probe_disc_limit;
        if (!want_probe) {
            r.h = class_number_imaginary(d, opts.enumeration);
            return;
        }
        std::vector<QuadForm> const forms = reduced_forms_imaginary(d, opts.enumeration);
        ClassNumberResult res;
        res.h = forms.size();
        r.h = res;
        std::uint64_t const n = r.n_claimed;
        if (n == 0 || res.h % n != 0)
            return;
        std::uint64_t const bound = std::min<std::uint64_t>(opts.probe_order_bound, res.h);
        for (auto const & f : forms) {
            auto const ord = form_order(f, d, bound);
            if (!ord || *ord % n != 0)
                continue;
            QuadForm g = f;
            for (std::uint64_t i = 1; i < *ord / n; ++i)
                g = compose(g, f, d);
            r.order_witness = OrderWitness{g, n};
            return;
        }
        return;
    }
    if (d > opts.real_fast_limit && !opts.slow) {
        r.slow_skipped = true;
        r.h_note = "D = " + std::to_string(d) + " needs --slow";
        return;
    }
    r.h = class_number_real(d, opts.enumeration);
}

void decide_claim(FamilyRecord & r)
{
    if (!r.applicable || !r.h) {
        r.claim = ClaimStatus::NotEvaluated;
        return;
    }
    r.claim = r.h->h % r.n_claimed == 0 ? ClaimStatus::Holds : ClaimStatus::Fails;
}

/// Class number and claim for a record whose delta factorization is known.
void finish(FamilyRecord & r, FactoredInt const & fdelta, AnalysisOptions const & opts, bool probe = false)
{
    bool const want_h = opts.class_numbers && (r.member || r.applicable || opts.all_h);
    if (r.delta_squarefree.is_squarefree())
        r.D = fundamental_discriminant(r.delta);
    else
        r.D = field_discriminant(fdelta);
    if (want_h)
        attach_class_number(r, opts, probe);
    decide_claim(r);
}

/// A random prime gives an irreducible reduction of an S_N polynomial with
/// probability about 1/N, so the trial list grows with the degree.
IrreducibilityVerdict certify(Trinomial const & t, AnalysisOptions const & opts)
{
    std::size_t const count = std::max<std::size_t>(25, std::size_t{opts.irreducibility_trials_per_degree} * t.degree());
    auto const primes = default_trial_primes(swan_discriminant(t), count);
    return irreducibility(t, primes, opts.budget);
}

BigInt param(FamilyRecord const & r, std::size_t i)
{
    return r.params.at(i).second;
}

}  // namespace

FamilyRecord main1_analyze(BigInt const & w, AnalysisOptions const & opts)
{
    guard_bits(3.0L * static_cast<long double>(bit_length(w)) + 3, opts.max_delta_bits, "main1");
    FamilyRecord r;
    r.family = Family::Main1;
    r.params = {{"w", w}};
    r.trinomial = Trinomial(3, BigInt(-w), BigInt(-1));
    r.delta = 4 * w * w * w - 27;
    r.n_claimed = 3;
    r.irreducible = certify(r.trinomial, opts);
    r.km = km_conditions(BigInt(1), w);

    FactoredInt const fd = factorize(r.delta, opts.budget);
    r.delta_squarefree = squarefree_status(fd);

    // 27 | d whenever 3 | w, so q = 3 is decided without factoring d.
    bool decided = false;
    if (mod_small(w, 3) == 0 && !r.irreducible.reducible()) {
        JksResult const jr = jks_prime_test(r.trinomial, BigInt(3));
        if (!jr.pass) {
            r.monogenic.kind = MonogenicityVerdict::Kind::NotMonogenic;
            r.monogenic.witness_prime = 3;
            r.monogenic.condition = jr.condition;
            decided = true;
        }
    }
    if (!decided)
        r.monogenic = monogenicity(r.trinomial, fd, r.irreducible);

    r.member = r.irreducible.irreducible() && r.delta_squarefree.is_squarefree();
    r.applicable = r.member && r.km->applicable();
    if (!r.member)
        r.applicability_note = "not in F1 (requires irreducible and d squarefree)";
    finish(r, fd, opts);
    return r;
}

FamilyRecord main2_analyze(std::uint64_t a, std::uint64_t b, AnalysisOptions const & opts)
{
    if (a < 1 || b < 2)
        throw usage_error("main2: requires a >= 1 and b >= 2");
    long double const est = std::max<long double>(6.0L * a + 3, (2.0L * b + 1) * 1.585L + 1);
    guard_bits(est, opts.max_delta_bits, "main2");
    FamilyRecord r;
    r.family = Family::Main2;
    r.params = {{"a", big(a)}, {"b", big(b)}};
    BigInt const w = pow_ui(BigInt(2), 2 * a);
    r.trinomial = Trinomial(3, BigInt(-w), BigInt(-pow_ui(BigInt(3), b - 1)));
    r.delta = pow_ui(BigInt(2), 6 * a + 2) - pow_ui(BigInt(3), 2 * b + 1);
    guard_exact_bits(r.delta, opts.max_delta_bits, "main2");
    r.n_claimed = (6 * b + 3) / std::gcd<std::uint64_t>(3, 2 * b + 1);

    r.irreducible = certify(r.trinomial, opts);
    FactoredInt const fd = factorize(r.delta, opts.budget);
    r.delta_squarefree = squarefree_status(fd);
    r.monogenic = monogenicity(r.trinomial, fd, r.irreducible);
    r.km = km_conditions(pow_ui(BigInt(3), 2 * b - 2), w);

    r.member = sgn(r.delta) < 0 && r.delta_squarefree.is_squarefree();
    bool const kishi = kishi_check(3 * a + 1, 2 * b + 1);
    r.applicable = r.member && r.km->applicable() && kishi;
    if (!r.member)
        r.applicability_note = "not in F2 (requires delta < 0 squarefree)";
    else if (!r.applicable)
        r.applicability_note = "Kishi or Kishi-Miyake hypotheses fail";
    finish(r, fd, opts);
    return r;
}

FamilyRecord main3_analyze(std::uint64_t N, std::uint64_t b, AnalysisOptions const & opts)
{
    if (N < 6 || N % 4 != 2 || b < 1)
        throw usage_error("main3: requires N >= 6, N = 2 (mod 4) and b >= 1");
    long double const est = static_cast<long double>(b) * N * std::log2(static_cast<long double>(N - 1)) + 1;
    guard_bits(est, opts.max_delta_bits, "main3");
    FamilyRecord r;
    r.family = Family::Main3;
    r.params = {{"N", big(N)}, {"b", big(b)}};
    BigInt const M = big(N - 1);
    r.trinomial = Trinomial(static_cast<unsigned>(N), BigInt(-big(N) * pow_ui(M, b)), BigInt(-M));
    r.delta = pow_ui(M, b * N) + 1;
    guard_exact_bits(r.delta, opts.max_delta_bits, "main3");
    r.n_claimed = b * N / 2;

    r.irreducible = certify(r.trinomial, opts);
    FactoredInt const fN = factorize(big(N), opts.budget);
    FactoredInt const fM = factorize(M, opts.budget);
    FactoredInt const fd = factorize(r.delta, opts.budget);
    r.delta_squarefree = squarefree_status(fd);
    FactoredInt const fdisc = combine(swan_discriminant(r.trinomial), {{&fN, N}, {&fM, N - 1}, {&fd, 1}});
    r.monogenic = monogenicity(r.trinomial, fdisc, r.irreducible);

    r.member = r.monogenic.monogenic();
    r.applicable = ankeny_chowla_check(N - 1, r.n_claimed, r.delta_squarefree);
    if (!r.applicable)
        r.applicability_note = "Ankeny-Chowla hypotheses fail (delta not known squarefree)";
    finish(r, fd, opts);
    return r;
}

FamilyRecord main4_analyze(std::uint64_t N, std::uint64_t b, AnalysisOptions const & opts)
{
    if (N < 3 || N % 4 != 3 || b < 1)
        throw usage_error("main4: requires N >= 3, N = 3 (mod 4) and b >= 1");
    long double const k_est = (static_cast<long double>(b) + 1) * N - b;
    guard_bits(k_est * std::log2(static_cast<long double>(N)) + 1, opts.max_delta_bits, "main4");
    FamilyRecord r;
    r.family = Family::Main4;
    r.params = {{"N", big(N)}, {"b", big(b)}};
    std::uint64_t const k = (b + 1) * N - b;
    BigInt const Nz = big(N);
    r.trinomial = Trinomial(static_cast<unsigned>(N), BigInt(-1), BigInt(-big(N - 1) * pow_ui(Nz, b)));
    r.delta = 1 - pow_ui(Nz, k);
    guard_exact_bits(r.delta, opts.max_delta_bits, "main4");
    r.n_claimed = k;

    r.irreducible = certify(r.trinomial, opts);
    FactoredInt const fM = factorize(big(N - 1), opts.budget);
    FactoredInt const fd = factorize(r.delta, opts.budget);
    r.delta_squarefree = squarefree_status(fd);
    FactoredInt const fdisc = combine(swan_discriminant(r.trinomial), {{&fM, N - 1}, {&fd, 1}});
    r.monogenic = monogenicity(r.trinomial, fdisc, r.irreducible);

    r.member = r.monogenic.monogenic();
    r.applicable = murty_check(N, k, r.delta_squarefree);
    if (!r.applicable)
        r.applicability_note = "Murty hypotheses fail (delta not known squarefree)";
    finish(r, fd, opts, true);
    return r;
}

BigInt family_discriminant(FamilyRecord const & r)
{
    switch (r.family) {
        case Family::Main1: {
            BigInt const w = param(r, 0);
            return 4 * w * w * w - 27;
        }
        case Family::Main2: {
            auto const a = param(r, 0).get_ui(), b = param(r, 1).get_ui();
            return pow_ui(BigInt(2), 6 * a + 2) - pow_ui(BigInt(3), 2 * b + 1);
        }
        case Family::Main3: {
            auto const N = param(r, 0).get_ui(), b = param(r, 1).get_ui();
            BigInt const delta = pow_ui(BigInt(N - 1), b * N) + 1;
            return pow_ui(BigInt(N), N) * pow_ui(BigInt(N - 1), N - 1) * delta;
        }
        case Family::Main4: {
            auto const N = param(r, 0).get_ui(), b = param(r, 1).get_ui();
            BigInt const delta = 1 - pow_ui(BigInt(N), (b + 1) * N - b);
            return pow_ui(BigInt(N - 1), N - 1) * delta;
        }
    }
    return 0;
}

std::optional<bool> closed_form_criterion(FamilyRecord const & r)
{
    auto sf = [](SquarefreeStatus const & s) -> std::optional<bool> {
        if (s.is_unknown())
            return std::nullopt;
        return s.is_squarefree();
    };
    switch (r.family) {
        case Family::Main1:
            if (r.irreducible.reducible())
                return false;
            return sf(r.delta_squarefree);
        case Family::Main2:
        case Family::Main4:
            return sf(r.delta_squarefree);
        case Family::Main3: {
            auto const N = param(r, 0).get_ui();
            if (!squarefree_status(BigInt(N) * (N - 1)).is_squarefree())
                return false;
            return sf(r.delta_squarefree);
        }
    }
    return std::nullopt;
}

std::vector<std::string> record_violations(FamilyRecord const & r)
{
    std::vector<std::string> out;
    std::string const label = std::string(to_string(r.family)) + " " + [&] {
        std::string s;
        for (auto const & [k, v] : r.params)
            s += k + "=" + to_string(v) + " ";
        return s;
    }();

    if (swan_discriminant(r.trinomial) != family_discriminant(r))
        out.push_back(label + "discriminant differs from the closed form");

    std::uint64_t expected_n = 0;
    if (r.family == Family::Main1) {
        expected_n = 3;
    } else {
        auto const p0 = param(r, 0).get_ui(), b = param(r, 1).get_ui();
        switch (r.family) {
            case Family::Main2: expected_n = (6 * b + 3) / std::gcd<std::uint64_t>(3, 2 * b + 1); break;
            case Family::Main3: expected_n = b * p0 / 2; break;
            case Family::Main4: expected_n = (b + 1) * p0 - b; break;
            default: break;
        }
    }
    if (r.n_claimed != expected_n)
        out.push_back(label + "claimed divisor differs from the family formula");

    if (r.family == Family::Main2) {
        if (!r.km)
            out.push_back(label + "missing witness pair");
        else {
            KMParams const & km = *r.km;
            if (km.condition != KMCondition::C1)
                out.push_back(label + "witness pair is not in case C1");
            if (km.d != km.u * r.delta)
                out.push_back(label + "witness d differs from u * delta");
            Trinomial const g(3, BigInt(-km.u * km.w), BigInt(-km.u * km.u));
            if (swan_discriminant(g) != km.u * km.u * km.u * r.delta)
                out.push_back(label + "witness cubic discriminant differs from u^3 delta");
        }
    }
    if (r.family == Family::Main3) {
        if (mod_small(r.delta, 4) != 2)
            out.push_back(label + "delta is not 2 mod 4");
        BigInt g;
        mpz_gcd(g.get_mpz_t(), r.trinomial.A().get_mpz_t(), r.delta.get_mpz_t());
        if (g != 2)
            out.push_back(label + "gcd(A, delta) differs from 2");
    }
    if (r.claim == ClaimStatus::Holds && (!r.h || r.h->h % r.n_claimed != 0))
        out.push_back(label + "claim marked as holding without n | h");
    if (r.order_witness) {
        auto const ord = form_order(r.order_witness->form, to_i64(*r.D), r.order_witness->order);
        if (!ord || *ord != r.order_witness->order)
            out.push_back(label + "order witness has the wrong order");
    }
    return out;
}

std::vector<FamilyRecord> scan(Family family, ParamRange first, ParamRange second, AnalysisOptions const & opts)
{
    std::vector<FamilyRecord> out;
    if (family == Family::Main1) {
        for (std::int64_t w = first.lo; w <= first.hi; ++w)
            out.push_back(main1_analyze(from_i64(w), opts));
        return out;
    }
    for (std::int64_t x = first.lo; x <= first.hi; ++x) {
        for (std::int64_t b = second.lo; b <= second.hi; ++b) {
            if (x < 1 || b < 1)
                continue;
            auto const ux = static_cast<std::uint64_t>(x);
            auto const ub = static_cast<std::uint64_t>(b);
            switch (family) {
                case Family::Main2:
                    if (ub >= 2)
                        out.push_back(main2_analyze(ux, ub, opts));
                    break;
                case Family::Main3:
                    if (ux >= 6 && ux % 4 == 2)
                        out.push_back(main3_analyze(ux, ub, opts));
                    break;
                case Family::Main4:
                    if (ux >= 3 && ux % 4 == 3)
                        out.push_back(main4_analyze(ux, ub, opts));
                    break;
                default: break;
            }
        }
    }
    return out;
}

DistinctnessResult distinctness(std::span<FamilyRecord const> records)
{
    DistinctnessResult res;
    if (records.empty())
        return res;
    std::map<BigInt, std::size_t> seen;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].family != records.front().family)
            throw usage_error("distinctness: records from different families");
        if (!records[i].monogenic.monogenic())
            throw usage_error("distinctness: only monogenic records are comparable");
        auto [it, inserted] = seen.emplace(swan_discriminant(records[i].trinomial), i);
        if (!inserted) {
            res.pass = false;
            res.collision = std::make_pair(it->second, i);
            return res;
        }
    }
    return res;
}

}  // namespace mtlab
