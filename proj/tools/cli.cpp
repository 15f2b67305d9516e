#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "mtlab/arith.hpp"
#include "mtlab/families.hpp"
#include "mtlab/oracles.hpp"
#include "mtlab/quadfield.hpp"
#include "mtlab/tables.hpp"
#include "mtlab/trinomial.hpp"

namespace mtlab::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig
{
    std::uint64_t seed = 1;
    std::int64_t factor_budget_ms = 0;
    bool slow = false;
    std::uint64_t probe_order_bound = 10'000;
    std::string format = "tsv";
};

void add_common(CLI::App * app, RunConfig & cfg)
{
    app->add_option("--seed", cfg.seed, "Seed for randomized primality bases, factoring and sampling");
    app->add_option("--factor-budget-ms", cfg.factor_budget_ms,
                    "Wall-clock limit per factorization in ms (0 = only the iteration budget)")
        ->check(CLI::NonNegativeNumber);
    app->add_flag("--slow", cfg.slow, "Allow class-number computations beyond the fast limits");
    app->add_option("--probe-order-bound", cfg.probe_order_bound,
                    "Largest element order tried by form-order probes (0 disables)");
    app->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
}

AnalysisOptions analysis_options(RunConfig const & cfg)
{
    AnalysisOptions o;
    o.budget.seed = cfg.seed;
    o.budget.time_limit = std::chrono::milliseconds(cfg.factor_budget_ms);
    o.slow = cfg.slow;
    o.probe_order_bound = cfg.probe_order_bound;
    return o;
}

BigInt parse_big(std::string const & s, char const * what)
{
    BigInt v;
    std::string t = s;
    if (!t.empty() && t[0] == '+')
        t.erase(0, 1);
    if (t.empty() || v.set_str(t, 10) != 0)
        throw usage_error(std::string(what) + ": not an integer: " + s);
    return v;
}

std::int64_t parse_i64(std::string const & s, char const * what)
{
    std::int64_t v = 0;
    auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw usage_error(std::string(what) + ": not a 64-bit integer: " + s);
    return v;
}

/// "lo..hi" or a single value.
ParamRange parse_range(std::string const & s, char const * what)
{
    auto const dots = s.find("..");
    if (dots == std::string::npos) {
        std::int64_t const v = parse_i64(s, what);
        return {v, v};
    }
    ParamRange r{parse_i64(s.substr(0, dots), what), parse_i64(s.substr(dots + 2), what)};
    if (r.lo > r.hi)
        throw usage_error(std::string(what) + ": empty range " + s);
    return r;
}

std::string na_or(std::optional<std::string> const & v)
{
    return v ? *v : "NA";
}

std::string dump(json const & j)
{
    return j.dump(2) + "\n";
}

json trinomial_json(Trinomial const & t)
{
    return json{{"N", std::to_string(t.degree())}, {"A", to_string(t.A())}, {"B", to_string(t.B())}};
}

json irreducible_json(IrreducibilityVerdict const & v)
{
    json j{{"verdict", to_string(v.kind)}};
    if (v.irreducible())
        j["certificate"] = to_string(v.certificate);
    if (v.certificate == IrreducibilityVerdict::Certificate::Eisenstein ||
        v.certificate == IrreducibilityVerdict::Certificate::ModP)
        j["prime"] = to_string(v.prime);
    if (v.root)
        j["root"] = to_string(*v.root);
    if (!v.reason.empty())
        j["reason"] = v.reason;
    return j;
}

json monogenic_json(MonogenicityVerdict const & v)
{
    json j{{"verdict", to_string(v.kind)}};
    if (v.kind == MonogenicityVerdict::Kind::NotMonogenic) {
        j["witness_prime"] = to_string(v.witness_prime);
        j["condition"] = std::to_string(v.condition);
    }
    if (v.root)
        j["root"] = to_string(*v.root);
    if (!v.reason.empty())
        j["reason"] = v.reason;
    return j;
}

json class_number_json(ClassNumberResult const & h)
{
    json j{{"value", std::to_string(h.h)}, {"method", to_string(h.method)}};
    if (h.narrow_h)
        j["narrow_h"] = std::to_string(*h.narrow_h);
    if (h.unit_norm)
        j["unit_norm"] = std::to_string(*h.unit_norm);
    return j;
}

json claim_json(ClaimStatus c)
{
    switch (c) {
        case ClaimStatus::Holds: return true;
        case ClaimStatus::Fails: return false;
        case ClaimStatus::NotEvaluated: return "NotEvaluated";
    }
    return "NotEvaluated";
}

json record_json(FamilyRecord const & r)
{
    json params = json::object();
    for (auto const & [k, v] : r.params)
        params[k] = to_string(v);
    json j{{"family", to_string(r.family)},
           {"params", params},
           {"trinomial", trinomial_json(r.trinomial)},
           {"delta", to_string(r.delta)},
           {"irreducible", irreducible_json(r.irreducible)},
           {"monogenic", monogenic_json(r.monogenic)},
           {"D", r.D ? json(to_string(*r.D)) : json(nullptr)},
           {"h", r.h ? class_number_json(*r.h) : json(nullptr)},
           {"n_claimed", std::to_string(r.n_claimed)},
           {"claim_holds", claim_json(r.claim)}};
    j["member"] = r.member;
    j["applicable"] = r.applicable;
    if (!r.applicability_note.empty())
        j["applicability_note"] = r.applicability_note;
    if (!r.h_note.empty())
        j["h_note"] = r.h_note;
    if (r.km) {
        j["km"] = json{{"u", to_string(r.km->u)},
                       {"w", to_string(r.km->w)},
                       {"d", to_string(r.km->d)},
                       {"condition", to_string(r.km->condition)},
                       {"d_nonsquare", r.km->d_nonsquare}};
    }
    if (r.order_witness) {
        auto const & f = r.order_witness->form;
        j["order_witness"] = json{{"form", {std::to_string(f.a), std::to_string(f.b), std::to_string(f.c)}},
                                  {"order", std::to_string(r.order_witness->order)}};
    }
    return j;
}

// ---------------------------------------------------------------------------

int cmd_table(int id, RunConfig const & cfg, std::ostream & out, std::ostream & err)
{
    if (id < 1 || id > 4)
        throw usage_error("table id must be 1, 2, 3 or 4");
    TableResult const t = compute_table(id, analysis_options(cfg));
    if (cfg.format == "json") {
        json rows = json::array();
        for (auto const & r : t.rows)
            rows.push_back(r);
        json recs = json::array();
        for (auto const & r : t.records)
            recs.push_back(record_json(r));
        json skipped = t.skipped;
        out << dump(json{{"table", id}, {"header", t.header}, {"rows", rows}, {"records", recs}, {"skipped", skipped}});
    } else {
        out << render_tsv(t.header, t.rows);
    }
    for (auto const & s : t.skipped)
        err << "skipped: " << s << "\n";
    return t.skipped.empty() ? exit_ok : exit_not_evaluated;
}

struct TrinomialArgs
{
    std::string N, A, B;

    Trinomial get() const
    {
        BigInt const n = parse_big(N, "--N");
        if (n < 2 || n > 100'000)
            throw usage_error("--N must be between 2 and 100000");
        return Trinomial(static_cast<unsigned>(n.get_ui()), parse_big(A, "--A"), parse_big(B, "--B"));
    }
};

std::vector<std::string> trinomial_cells(Trinomial const & t)
{
    return {std::to_string(t.degree()), to_string(t.A()), to_string(t.B())};
}

int cmd_disc(TrinomialArgs const & a, RunConfig const & cfg, std::ostream & out)
{
    Trinomial const t = a.get();
    BigInt const d = swan_discriminant(t);
    if (cfg.format == "json") {
        json j{{"trinomial", trinomial_json(t)}, {"discriminant", to_string(d)}};
        if (t.degree() <= max_sylvester_degree)
            j["resultant_discriminant"] = to_string(resultant_discriminant(t));
        out << dump(j);
    } else {
        auto cells = trinomial_cells(t);
        cells.push_back(to_string(d));
        out << render_tsv({"N", "A", "B", "discriminant"}, {cells});
    }
    return exit_ok;
}

int cmd_irr(TrinomialArgs const & a, RunConfig const & cfg, std::ostream & out)
{
    Trinomial const t = a.get();
    AnalysisOptions const o = analysis_options(cfg);
    IrreducibilityVerdict const v = irreducibility(t, {}, o.budget);
    if (cfg.format == "json") {
        out << dump(json{{"trinomial", trinomial_json(t)}, {"irreducible", irreducible_json(v)}});
    } else {
        std::optional<std::string> witness;
        if (v.root)
            witness = to_string(*v.root);
        else if (v.irreducible() && v.certificate != IrreducibilityVerdict::Certificate::RationalRootExhaustion)
            witness = to_string(v.prime);
        auto cells = trinomial_cells(t);
        cells.push_back(to_string(v.kind));
        cells.push_back(v.irreducible() ? to_string(v.certificate) : "NA");
        cells.push_back(na_or(witness));
        out << render_tsv({"N", "A", "B", "verdict", "certificate", "witness"}, {cells});
    }
    return v.unknown() ? exit_not_evaluated : exit_ok;
}

int cmd_monogenic(TrinomialArgs const & a, RunConfig const & cfg, std::ostream & out)
{
    Trinomial const t = a.get();
    if (t.degree() < 3)
        throw usage_error("monogenic: N must be at least 3");
    AnalysisOptions const o = analysis_options(cfg);
    MonogenicityVerdict const v = monogenicity(t, o.budget);
    if (cfg.format == "json") {
        out << dump(json{{"trinomial", trinomial_json(t)},
                         {"discriminant", to_string(swan_discriminant(t))},
                         {"monogenic", monogenic_json(v)}});
    } else {
        bool const nm = v.kind == MonogenicityVerdict::Kind::NotMonogenic;
        auto cells = trinomial_cells(t);
        cells.push_back(to_string(v.kind));
        cells.push_back(nm ? to_string(v.witness_prime) : "NA");
        cells.push_back(nm ? std::to_string(v.condition) : "NA");
        out << render_tsv({"N", "A", "B", "verdict", "witness_prime", "condition"}, {cells});
    }
    return v.decided() ? exit_ok : exit_not_evaluated;
}

int cmd_classnum(std::string const & delta_s, RunConfig const & cfg, std::ostream & out, std::ostream & err)
{
    BigInt const delta = parse_big(delta_s, "--delta");
    if (delta == 0 || delta == 1)
        throw usage_error("--delta must differ from 0 and 1");
    AnalysisOptions const o = analysis_options(cfg);
    SquarefreeStatus const sf = squarefree_status(delta, o.budget);
    if (sf.is_not_squarefree()) {
        err << "classnum: delta is divisible by " << to_string(sf.witness) << "^2\n";
        return exit_not_evaluated;
    }
    if (sf.is_unknown()) {
        err << "classnum: squarefree status of delta unknown: " << sf.reason << "\n";
        return exit_not_evaluated;
    }
    BigInt const D = fundamental_discriminant(delta);
    if (abs(D) >= (BigInt(1) << 62)) {
        err << "classnum: |D| outside the supported range 2^62\n";
        return exit_not_evaluated;
    }
    std::int64_t const d = to_i64(D);
    bool const imaginary = d < 0;
    if (!cfg.slow && (imaginary ? -d > o.imaginary_fast_limit : d > o.real_fast_limit)) {
        err << "classnum: D = " << d << " needs --slow\n";
        return exit_not_evaluated;
    }
    ClassNumberResult const h = imaginary ? class_number_imaginary(d) : class_number_real(d);
    if (cfg.format == "json") {
        out << dump(json{{"delta", to_string(delta)}, {"D", to_string(D)}, {"h", class_number_json(h)}});
    } else {
        out << render_tsv({"delta", "D", "h", "method", "narrow_h", "unit_norm"},
                          {{to_string(delta), to_string(D), std::to_string(h.h), to_string(h.method),
                            h.narrow_h ? std::to_string(*h.narrow_h) : "NA",
                            h.unit_norm ? std::to_string(*h.unit_norm) : "NA"}});
    }
    return exit_ok;
}

int cmd_order(std::string const & a_s, std::string const & b_s, std::string const & D_s, RunConfig const & cfg,
              std::ostream & out)
{
    std::int64_t const a = parse_i64(a_s, "--a");
    std::int64_t const b = parse_i64(b_s, "--b");
    std::int64_t const D = parse_i64(D_s, "--D");
    if (D >= 0 || a <= 0)
        throw usage_error("order: requires a > 0 and D < 0");
    if (D <= -(std::int64_t{1} << 62) || b > 3'000'000'000LL || b < -3'000'000'000LL)
        throw usage_error("order: values outside the supported range");
    __int128 const num = static_cast<__int128>(b) * b - D;
    if (num % (4 * static_cast<__int128>(a)) != 0)
        throw usage_error("order: b^2 - D is not divisible by 4a");
    QuadForm const f{a, b, static_cast<std::int64_t>(num / (4 * a))};
    if (std::gcd(std::gcd(f.a, f.b), f.c) != 1)
        throw usage_error("order: form is not primitive");
    auto const ord = form_order(f, D, cfg.probe_order_bound);
    if (cfg.format == "json") {
        out << dump(json{{"form", {std::to_string(f.a), std::to_string(f.b), std::to_string(f.c)}},
                         {"D", std::to_string(D)},
                         {"order", ord ? json(std::to_string(*ord)) : json("Unknown")}});
    } else {
        out << render_tsv({"a", "b", "c", "D", "order"},
                          {{std::to_string(f.a), std::to_string(f.b), std::to_string(f.c), std::to_string(D),
                            ord ? std::to_string(*ord) : "Unknown"}});
    }
    return ord ? exit_ok : exit_not_evaluated;
}

// ---------------------------------------------------------------------------
// scan and verify share parameter ranges.

struct RangeArgs
{
    std::string first;   // --range / --w / --a / --N
    std::string second;  // --b
};

struct FamilyRanges
{
    ParamRange first;
    ParamRange second;
};

/// The table parameter ranges of each family, split into rectangles.
std::vector<FamilyRanges> default_ranges(Family f)
{
    switch (f) {
        case Family::Main1: return {{{-10, 10}, {}}};
        case Family::Main2: return {{{1, 3}, {2, 6}}};
        case Family::Main3: return {{{6, 6}, {1, 2}}};
        case Family::Main4: return {{{3, 3}, {2, 4}}, {{7, 7}, {1, 1}}};
    }
    return {};
}

std::vector<FamilyRanges> resolve_ranges(Family f, RangeArgs const & r)
{
    std::vector<FamilyRanges> def = default_ranges(f);
    if (r.first.empty() && r.second.empty())
        return def;
    FamilyRanges out = def.front();
    if (!r.first.empty())
        out.first = parse_range(r.first, "range");
    if (!r.second.empty()) {
        if (f == Family::Main1)
            throw usage_error("--b does not apply to main1");
        out.second = parse_range(r.second, "--b");
    }
    return {out};
}

std::vector<FamilyRecord> run_scan(Family f, std::vector<FamilyRanges> const & ranges, AnalysisOptions const & o)
{
    std::vector<FamilyRecord> recs;
    for (auto const & r : ranges) {
        auto part = scan(f, r.first, r.second, o);
        recs.insert(recs.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return recs;
}

int cmd_scan(std::string const & fam, RangeArgs const & ranges, bool all_h, RunConfig const & cfg, std::ostream & out,
             std::ostream & err)
{
    auto const f = family_from_string(fam);
    if (!f)
        throw usage_error("unknown family: " + fam);
    AnalysisOptions o = analysis_options(cfg);
    o.all_h = all_h;
    auto const recs = run_scan(*f, resolve_ranges(*f, ranges), o);

    int code = exit_ok;
    for (auto const & r : recs) {
        if (r.claim == ClaimStatus::Fails)
            code = exit_claim_violated;
    }
    if (code == exit_ok) {
        for (auto const & r : recs) {
            bool const open = r.slow_skipped || !r.monogenic.decided() ||
                              (r.applicable && r.claim == ClaimStatus::NotEvaluated);
            if (open) {
                code = exit_not_evaluated;
                err << "not evaluated: " << to_string(r.family);
                for (auto const & [k, v] : r.params)
                    err << " " << k << "=" << to_string(v);
                err << (r.h_note.empty() ? "" : ": " + r.h_note) << "\n";
            }
        }
    }

    if (cfg.format == "json") {
        json arr = json::array();
        for (auto const & r : recs)
            arr.push_back(record_json(r));
        out << dump(arr);
        return code;
    }
    std::vector<std::string> header;
    if (*f == Family::Main1)
        header = {"w"};
    else if (*f == Family::Main2)
        header = {"a", "b"};
    else
        header = {"N", "b"};
    for (char const * c : {"delta", "irreducible", "monogenic", "member", "D", "h", "n", "claim_holds"})
        header.emplace_back(c);
    std::vector<std::vector<std::string>> rows;
    for (auto const & r : recs) {
        std::vector<std::string> row;
        for (auto const & [k, v] : r.params)
            row.push_back(to_string(v));
        row.push_back(to_string(r.delta));
        row.push_back(to_string(r.irreducible.kind));
        row.push_back(to_string(r.monogenic.kind));
        row.push_back(r.member ? "yes" : "no");
        row.push_back(r.D ? to_string(*r.D) : "NA");
        row.push_back(r.h ? std::to_string(r.h->h) : "NA");
        row.push_back(std::to_string(r.n_claimed));
        row.push_back(to_string(r.claim));
        rows.push_back(std::move(row));
    }
    out << render_tsv(header, rows);
    return code;
}

// ---------------------------------------------------------------------------

enum class Status { Pass, Fail, NotEvaluated, NotApplicable };

char const * status_name(Status s)
{
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::NotEvaluated: return "NOTEVAL";
        case Status::NotApplicable: return "N/A";
    }
    return "N/A";
}

struct Check
{
    Status status;
    std::string name;
    std::string detail;
};

std::string record_label(FamilyRecord const & r)
{
    std::string s = to_string(r.family);
    for (auto const & [k, v] : r.params)
        s += " " + k + "=" + to_string(v);
    return s;
}

void verify_family(Family f, std::vector<FamilyRanges> const & ranges, AnalysisOptions const & o,
                   std::vector<Check> & checks)
{
    auto const recs = run_scan(f, ranges, o);
    std::vector<FamilyRecord> members;
    for (auto const & r : recs) {
        std::string const label = record_label(r);
        auto const violations = record_violations(r);
        if (violations.empty())
            checks.push_back({Status::Pass, "invariants", label});
        for (auto const & v : violations)
            checks.push_back({Status::Fail, "invariants", v});

        if (!r.applicable) {
            checks.push_back({Status::NotApplicable, "claim", label + ": " + r.applicability_note});
        } else if (r.claim == ClaimStatus::NotEvaluated) {
            checks.push_back({Status::NotEvaluated, "claim", label + ": " + r.h_note});
        } else {
            std::string const detail = label + ": n=" + std::to_string(r.n_claimed) + " h=" + std::to_string(r.h->h);
            checks.push_back({r.claim == ClaimStatus::Holds ? Status::Pass : Status::Fail, "claim n|h", detail});
        }

        bool const in_scope = f != Family::Main1 || (r.km && r.km->applicable());
        if (in_scope && r.irreducible.irreducible()) {
            auto const closed = closed_form_criterion(r);
            if (!closed || !r.monogenic.decided())
                checks.push_back({Status::NotEvaluated, "monogenicity criterion", label});
            else
                checks.push_back({*closed == r.monogenic.monogenic() ? Status::Pass : Status::Fail,
                                  "monogenicity criterion", label + ": " + to_string(r.monogenic.kind)});
        }
        if ((f == Family::Main1 || f == Family::Main2) && r.member) {
            bool const s3 = cubic_galois_group(r.trinomial) == CubicGaloisGroup::S3;
            checks.push_back({s3 ? Status::Pass : Status::Fail, "Galois group S3", label});
        }
        if (r.order_witness) {
            checks.push_back({Status::Pass, "element of order n",
                              label + ": " + r.order_witness->form.to_string() + " has order " +
                                  std::to_string(r.order_witness->order)});
        }
        if (r.member && r.monogenic.monogenic())
            members.push_back(r);
    }
    if (!members.empty()) {
        DistinctnessResult const d = distinctness(members);
        std::string detail = std::to_string(members.size()) + " monogenic members";
        if (d.collision)
            detail += ", collision " + record_label(members[d.collision->first]) + " / " +
                      record_label(members[d.collision->second]);
        checks.push_back({d.pass ? Status::Pass : Status::Fail, std::string("distinct fields ") + to_string(f), detail});
    }
}

void verify_oracles(AnalysisOptions const & o, std::uint64_t seed, std::vector<Check> & checks)
{
    auto add = [&](OracleReport const & rep) {
        std::string detail = "checked=" + std::to_string(rep.checked) + " mismatches=" + std::to_string(rep.mismatches) +
                             " undecided=" + std::to_string(rep.undecided);
        for (auto const & e : rep.examples)
            detail += "; " + e;
        Status s = rep.passed() ? Status::Pass : Status::Fail;
        if (rep.mismatches == 0 && rep.undecided_other > 0)
            s = Status::NotEvaluated;
        checks.push_back({s, rep.name, detail});
    };
    add(discriminant_oracle());
    add(jks_index_oracle());
    add(real_class_number_oracle(10'000, 100, 1'000'000, seed));
    add(form_order_oracle());
    AnalysisOptions sample = o;
    sample.budget.rho_iterations = 1 << 16;
    for (auto f : {Family::Main1, Family::Main2, Family::Main3, Family::Main4})
        add(monogenicity_criterion_oracle(f, 200, sample, 100'000, seed));
}

int cmd_verify(std::string const & scope, RangeArgs const & ranges, RunConfig const & cfg, std::ostream & out)
{
    AnalysisOptions o = analysis_options(cfg);
    // The reference-table rows are a fixed, small set: check all of them, including
    // the ones that plain table/scan runs only do under --slow.
    if (ranges.first.empty() && ranges.second.empty())
        o.slow = true;
    std::vector<Check> checks;
    if (scope == "all") {
        if (!ranges.first.empty() || !ranges.second.empty())
            throw usage_error("verify all uses the table ranges; pick one family to override them");
        for (auto f : {Family::Main1, Family::Main2, Family::Main3, Family::Main4})
            verify_family(f, default_ranges(f), o, checks);
        verify_oracles(o, cfg.seed, checks);
    } else if (scope == "oracles") {
        verify_oracles(o, cfg.seed, checks);
    } else if (auto const f = family_from_string(scope)) {
        verify_family(*f, resolve_ranges(*f, ranges), o, checks);
    } else {
        throw usage_error("unknown verify scope: " + scope);
    }

    std::size_t tally[4] = {0, 0, 0, 0};
    for (auto const & c : checks)
        ++tally[static_cast<int>(c.status)];
    if (cfg.format == "json") {
        json arr = json::array();
        for (auto const & c : checks)
            arr.push_back(json{{"status", status_name(c.status)}, {"check", c.name}, {"detail", c.detail}});
        out << dump(json{{"checks", arr},
                         {"tally",
                          {{"pass", tally[0]}, {"fail", tally[1]}, {"not_evaluated", tally[2]},
                           {"not_applicable", tally[3]}}}});
    } else {
        std::vector<std::vector<std::string>> rows;
        for (auto const & c : checks)
            rows.push_back({status_name(c.status), c.name, c.detail});
        out << render_tsv({"status", "check", "detail"}, rows);
        out << "# pass=" << tally[0] << " fail=" << tally[1] << " not_evaluated=" << tally[2]
            << " not_applicable=" << tally[3] << "\n";
    }
    if (tally[1] > 0)
        return exit_claim_violated;
    if (tally[2] > 0)
        return exit_not_evaluated;
    return exit_ok;
}

}  // namespace

int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Monogenic trinomials and class numbers of the associated quadratic fields", "mtlab"};
    app.require_subcommand(1);
    RunConfig cfg;

    int table_id = 0;
    auto * table = app.add_subcommand("table", "Recompute one of the reference tables");
    table->add_option("id", table_id, "Table number (1-4)")->required();
    add_common(table, cfg);

    TrinomialArgs tri;
    auto add_trinomial = [&](CLI::App * sc) {
        sc->add_option("--N", tri.N, "Degree")->required();
        sc->add_option("--A", tri.A, "Coefficient of x")->required();
        sc->add_option("--B", tri.B, "Constant term")->required();
        add_common(sc, cfg);
    };
    auto * disc = app.add_subcommand("disc", "Discriminant of x^N + Ax + B");
    add_trinomial(disc);
    auto * irr = app.add_subcommand("irr", "Irreducibility certificate");
    add_trinomial(irr);
    auto * mono = app.add_subcommand("monogenic", "Monogenicity verdict via the JKS prime test");
    add_trinomial(mono);

    std::string delta;
    auto * classnum = app.add_subcommand("classnum", "Class number of Q(sqrt(delta))");
    classnum->add_option("--delta", delta, "Squarefree integer other than 0 and 1")->required();
    add_common(classnum, cfg);

    std::string form_a, form_b, form_D;
    auto * order = app.add_subcommand("order", "Order of a positive definite form in the class group");
    order->add_option("--a", form_a, "Leading coefficient")->required();
    order->add_option("--b", form_b, "Middle coefficient")->required();
    order->add_option("--D,--delta", form_D, "Negative discriminant")->required();
    add_common(order, cfg);

    std::string family, scope;
    RangeArgs ranges;
    bool all_h = false;
    auto add_ranges = [&](CLI::App * sc) {
        auto * r = sc->add_option("--range", ranges.first, "Range lo..hi of the first family parameter");
        sc->add_option("--w,--a,--N", ranges.first, "Same as --range")->excludes(r);
        sc->add_option("--b", ranges.second, "Range lo..hi of b");
    };
    auto * scan_cmd = app.add_subcommand("scan", "Analyze every parameter tuple in a range");
    scan_cmd->add_option("family", family, "main1, main2, main3 or main4")->required();
    add_ranges(scan_cmd);
    scan_cmd->add_flag("--all-h", all_h, "Compute class numbers for non-members too");
    add_common(scan_cmd, cfg);

    auto * verify = app.add_subcommand("verify", "Check the divisibility claims and the property oracles");
    verify->add_option("scope", scope, "main1, main2, main3, main4, oracles or all")->required();
    add_ranges(verify);
    add_common(verify, cfg);

    std::vector<std::string> storage{"mtlab"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto & s : storage)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const & e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (table->parsed())
            return cmd_table(table_id, cfg, out, err);
        if (disc->parsed())
            return cmd_disc(tri, cfg, out);
        if (irr->parsed())
            return cmd_irr(tri, cfg, out);
        if (mono->parsed())
            return cmd_monogenic(tri, cfg, out);
        if (classnum->parsed())
            return cmd_classnum(delta, cfg, out, err);
        if (order->parsed())
            return cmd_order(form_a, form_b, form_D, cfg, out);
        if (scan_cmd->parsed())
            return cmd_scan(family, ranges, all_h, cfg, out, err);
        if (verify->parsed())
            return cmd_verify(scope, ranges, cfg, out);
    } catch (usage_error const & e) {
        err << "mtlab: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace mtlab::cli
