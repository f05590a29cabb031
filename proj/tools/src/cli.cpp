#include "knotmat/cli.hpp"

#include <knotmat/bands.hpp>
#include <knotmat/catalogue.hpp>
#include <knotmat/errors.hpp>
#include <knotmat/exactmoments.hpp>
#include <knotmat/genfunc.hpp>
#include <knotmat/intpoly.hpp>
#include <knotmat/knotpoly.hpp>
#include <knotmat/multiseries.hpp>
#include <knotmat/npoly.hpp>
#include <knotmat/rational.hpp>
#include <knotmat/seifert.hpp>
#include <knotmat/trace_monomial.hpp>
#include <knotmat/zeros.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace knotmat::cli {
namespace {

using ojson = nlohmann::ordered_json;

// Bad flag values and inconsistent combinations; always exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shared knobs; every subcommand accepts them, each mirrored by a
// KNOTMAT_* environment variable (flag wins over the environment).
struct RunConfig {
    std::uint64_t pairing_budget = 40'000'000;
    std::size_t memo_budget = 1'000'000;
    unsigned crossing_cap = 16;
    unsigned rung_cap = 20;
    unsigned precision = 60;
    unsigned threads = 0;
    std::string format_flag;
    bool json_flag = false;
    bool csv_flag = false;
    bool text_flag = false;
    std::string out_path;

    std::string format = "text"; // resolved after parsing

    MomentOptions moments() const { return {pairing_budget, memo_budget, threads}; }
};

void validate_config(const RunConfig& cfg) {
    if (cfg.pairing_budget == 0) throw UsageError("pairing budget must be positive");
    if (cfg.memo_budget == 0) throw UsageError("memo budget must be positive");
    if (cfg.crossing_cap == 0) throw UsageError("crossing cap must be positive");
    if (cfg.rung_cap == 0) throw UsageError("rung cap must be positive");
    if (cfg.precision < 15) throw UsageError("precision must be at least 15 significant digits");
}

std::string resolve_format(const RunConfig& cfg) {
    const int shortcuts = int(cfg.json_flag) + int(cfg.csv_flag) + int(cfg.text_flag);
    if (shortcuts > 1) throw UsageError("pick at most one of --json/--csv/--text");
    if (cfg.json_flag) return "json";
    if (cfg.csv_flag) return "csv";
    if (cfg.text_flag) return "text";
    // flag values pass IsMember, but environment values arrive unchecked
    const std::string f = cfg.format_flag.empty() ? "text" : cfg.format_flag;
    if (f != "json" && f != "csv" && f != "text")
        throw UsageError("unknown format '" + f + "' (expected json, csv, or text)");
    return f;
}

std::string rational_str(const Rational& r) { return r.str(); }

std::string fmt(double v) {
    std::ostringstream ss;
    ss << std::setprecision(15) << v;
    return ss.str();
}

// Half-lattice exponent: stored 2e renders as e, odd values as "k/2".
std::string half_exp(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

template <typename Seq>
std::string join(const Seq& xs, const char* sep) {
    std::ostringstream ss;
    bool first = true;
    for (const auto& x : xs) {
        if (!first) ss << sep;
        ss << x;
        first = false;
    }
    return ss.str();
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        Int num{slash == std::string::npos ? text : text.substr(0, slash)};
        Int den = 1;
        if (slash != std::string::npos) den = Int(text.substr(slash + 1));
        if (den == 0) throw UsageError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("expected a rational like 3 or -1/2, got '" + text + "'");
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::string norm = text;
    std::replace(norm.begin(), norm.end(), ',', ' ');
    std::istringstream in(norm);
    std::vector<int> out;
    int v = 0;
    while (in >> v) out.push_back(v);
    if (!in.eof()) throw UsageError("not an integer list: '" + text + "'");
    if (out.empty()) throw UsageError("empty integer list");
    return out;
}

std::vector<RungSign> parse_signs(const std::string& text, std::size_t rungs) {
    std::vector<RungSign> out;
    for (char ch : text) {
        if (ch == ',' || ch == ' ') continue;
        if (ch == 'o' || ch == 'O')
            out.push_back(RungSign::Over);
        else if (ch == 'u' || ch == 'U')
            out.push_back(RungSign::Under);
        else
            throw UsageError(std::string("sign letters are o/u, got '") + ch + "'");
    }
    if (out.size() != rungs)
        throw UsageError("got " + std::to_string(out.size()) + " signs for " +
                         std::to_string(rungs) + " rungs");
    return out;
}

// Input files resolve against the working directory first, then against the
// shipped data directory (so `--pd 3_1.json` works out of the box).
std::string resolve_input(const std::string& path, const std::string& subdir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (fs::exists(path, ec)) return path;
    const std::string shipped = data_file_path(subdir + "/" + path);
    if (fs::exists(shipped, ec)) return shipped;
    throw Error("cannot open '" + path + "'");
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

ojson npoly_json(const NPolynomial& p) {
    ojson o = ojson::object();
    for (const auto& [e, c] : p.coefficients()) o[std::to_string(e)] = rational_str(c);
    return o;
}

void npoly_csv(const NPolynomial& p, std::ostream& s) {
    s << "exponent,coefficient\n";
    for (const auto& [e, c] : p.coefficients()) s << e << "," << rational_str(c) << "\n";
}

ojson ipoly_json(const IntPolynomial& p) {
    ojson o = ojson::object();
    for (unsigned e = 0; e < p.coefficients().size(); ++e)
        if (p.coefficient(e) != 0) o[std::to_string(e)] = p.coefficient(e).str();
    return o;
}

void ipoly_csv(const IntPolynomial& p, std::ostream& s) {
    s << "exponent,coefficient\n";
    for (unsigned e = 0; e < p.coefficients().size(); ++e)
        if (p.coefficient(e) != 0) s << e << "," << p.coefficient(e).str() << "\n";
}

const char* verdict_str(Verdict v) {
    return v == Verdict::KnotCandidate ? "knot-candidate" : "unknot-reducible";
}

const char* kind_of(const Error& e) {
    if (dynamic_cast<const InvalidCoupling*>(&e)) return "invalid-coupling";
    if (dynamic_cast<const EvenParameter*>(&e)) return "even-parameter";
    if (dynamic_cast<const NonSymmetrizable*>(&e)) return "non-symmetrizable";
    if (dynamic_cast<const OffCircle*>(&e)) return "off-circle";
    if (dynamic_cast<const InsufficientData*>(&e)) return "insufficient-data";
    if (dynamic_cast<const MultiComponent*>(&e)) return "multi-component";
    if (dynamic_cast<const NegativeFloor*>(&e)) return "negative-floor";
    if (dynamic_cast<const ConservationViolated*>(&e)) return "conservation-violated";
    if (dynamic_cast<const MalformedDiagram*>(&e)) return "malformed-diagram";
    if (dynamic_cast<const NotPalindromic*>(&e)) return "not-palindromic";
    if (dynamic_cast<const UnknownKnot*>(&e)) return "unknown-knot";
    if (dynamic_cast<const UnknownTarget*>(&e)) return "unknown-target";
    if (dynamic_cast<const Unsupported*>(&e)) return "unsupported";
    return "invalid";
}

// ---------------------------------------------------------------- moments

struct MomentsOpts {
    std::string traces;
    std::string coupling;
};

int run_moments(const RunConfig& cfg, const MomentsOpts& o, std::ostream& s) {
    const TraceMonomial spec = TraceMonomial::parse(o.traces);
    const MomentOptions mo = cfg.moments();
    const bool coupled = !o.coupling.empty();
    if (!coupled && !spec.single_matrix())
        throw UsageError("two-label monomials need --coupling");

    NPolynomial poly;
    Rational replica;
    Rational c;
    if (coupled) {
        c = parse_rational(o.coupling);
        poly = coupled_moment(spec, c, mo);
    } else {
        poly = wick_moment_recursive(spec, mo);
        replica = replica_coefficient(spec, mo);
    }

    if (cfg.format == "json") {
        ojson j;
        j["monomial"] = spec.str();
        if (coupled) j["coupling"] = rational_str(c);
        j["polynomial"] = npoly_json(poly);
        if (!coupled) j["replica"] = rational_str(replica);
        s << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        npoly_csv(poly, s);
    } else {
        s << spec.str() << ": " << poly.str("N") << "\n";
        if (!coupled) s << "replica: " << rational_str(replica) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------- replica-series

struct SeriesOpts {
    unsigned traces = 1;
    unsigned degree = 0;
};

// Partitions of `remaining` into `slots` nonincreasing positive parts with
// first part <= maxpart, emitted largest-first.
void descending_partitions(unsigned remaining, unsigned slots, unsigned maxpart,
                           std::vector<unsigned>& cur,
                           std::vector<std::vector<unsigned>>& out) {
    if (slots == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    if (remaining < slots) return;
    unsigned hi = std::min(maxpart, remaining - (slots - 1));
    for (unsigned p = hi; p >= 1; --p) {
        if (static_cast<std::uint64_t>(p) * slots < remaining) break;
        cur.push_back(p);
        descending_partitions(remaining - p, slots - 1, p, cur, out);
        cur.pop_back();
    }
}

int run_series(const RunConfig& cfg, const SeriesOpts& o, std::ostream& s) {
    const MultiSeries series = replica_generating_series(o.traces, o.degree);
    std::vector<std::vector<unsigned>> keys;
    std::vector<unsigned> cur;
    descending_partitions(o.degree, o.traces, o.degree, cur, keys);

    if (cfg.format == "csv") s << "exponents,coefficient\n";
    for (const auto& key : keys) {
        const Rational c = series.coefficient(key);
        if (c == 0) continue;
        if (cfg.format == "json") {
            ojson j;
            j["exponents"] = key;
            j["coefficient"] = rational_str(c);
            s << j.dump() << "\n";
        } else if (cfg.format == "csv") {
            s << join(key, " ") << "," << rational_str(c) << "\n";
        } else {
            s << "[" << join(key, ",") << "] " << rational_str(c) << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- seifert

struct SeifertOpts {
    unsigned genus = 0;
    int torus = 0;
};

int run_seifert(const RunConfig& cfg, const SeifertOpts& o, std::ostream& s) {
    IntPolynomial p;
    ojson head;
    if (o.torus != 0) {
        p = torus_2n_alexander(o.torus);
        head["family"] = "torus";
        head["n"] = o.torus;
    } else if (o.genus != 0) {
        p = alexander_trivalent_recursive(o.genus);
        head["family"] = "trivalent";
        head["genus"] = o.genus;
    } else {
        throw UsageError("pass --genus G or --torus N");
    }

    if (cfg.format == "json") {
        head["variable"] = "t";
        head["coefficients"] = ipoly_json(p);
        s << head.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        ipoly_csv(p, s);
    } else {
        s << p.str("t") << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ zeros

struct ZerosOpts {
    std::string family = "trivalent";
    unsigned gmax = 1;
    int torus = 0;
};

int run_zeros(const RunConfig& cfg, const ZerosOpts& o, std::ostream& s) {
    RootFindOptions ro;
    ro.precision = cfg.precision;

    std::vector<std::pair<unsigned, RootSet>> rows;
    if (o.torus != 0) {
        rows.emplace_back(static_cast<unsigned>(o.torus),
                          find_roots(torus_2n_alexander(o.torus), ro));
    } else {
        auto sets = trivalent_zero_sweep(o.gmax, ro);
        for (unsigned g = 1; g <= o.gmax; ++g) rows.emplace_back(g, std::move(sets[g - 1]));
    }

    constexpr double deg = 180.0 / std::numbers::pi;
    if (cfg.format == "json") {
        ojson arr = ojson::array();
        for (const auto& [g, set] : rows)
            for (const Root& r : set.roots) {
                ojson row;
                row["g"] = g;
                row["re"] = r.value.real();
                row["im"] = r.value.imag();
                row["modulus"] = std::abs(r.value);
                row["arg_degrees"] = std::arg(r.value) * deg;
                row["residual"] = r.residual;
                arr.push_back(std::move(row));
            }
        s << arr.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        s << "g,re,im,modulus,arg_degrees,residual\n";
        for (const auto& [g, set] : rows)
            for (const Root& r : set.roots)
                s << g << "," << fmt(r.value.real()) << "," << fmt(r.value.imag()) << ","
                  << fmt(std::abs(r.value)) << "," << fmt(std::arg(r.value) * deg) << ","
                  << fmt(r.residual) << "\n";
    } else {
        for (const auto& [g, set] : rows)
            for (const Root& r : set.roots)
                s << "g=" << g << " " << fmt(r.value.real())
                  << (r.value.imag() < 0 ? " - " : " + ") << fmt(std::fabs(r.value.imag()))
                  << "i (|z| " << fmt(std::abs(r.value)) << ", arg " << fmt(std::arg(r.value) * deg)
                  << " deg, residual " << fmt(r.residual) << ")\n";
    }
    return 0;
}

// ------------------------------------------------------------------ bands

struct BandsOpts {
    std::string skeleton;
    bool census = false;
    bool alternating = false;
    std::string signs;
};

int run_bands(const RunConfig& cfg, const BandsOpts& o, std::ostream& s) {
    LadderDiagram d = ladder_from_json(slurp(resolve_input(o.skeleton, "skeletons")));
    if (o.alternating) d = d.with_signs(alternating_assignment(d));
    if (!o.signs.empty()) d = d.with_signs(parse_signs(o.signs, d.rungs().size()));

    if (o.census) {
        CensusOptions co;
        co.rung_cap = cfg.rung_cap;
        co.threads = cfg.threads;
        const CensusSummary sum = enumerate_assignments(d, co);
        if (cfg.format == "json") {
            ojson j;
            j["strands"] = d.strands();
            j["rungs"] = d.rungs().size();
            j["assignments"] = sum.entries.size();
            j["knot_candidates"] = sum.knot_candidates;
            j["unknot_reducible"] = sum.unknot_reducible;
            j["multi_component"] = sum.multi_component;
            j["linked"] = sum.linked;
            ojson arr = ojson::array();
            for (const CensusEntry& e : sum.entries) {
                ojson row;
                row["mask"] = e.mask;
                row["components"] = e.components;
                row["knot_candidate"] = e.knot_candidate;
                row["linked"] = e.linked;
                row["sequence"] = e.sequence;
                arr.push_back(std::move(row));
            }
            j["entries"] = std::move(arr);
            s << j.dump(2) << "\n";
        } else if (cfg.format == "csv") {
            s << "mask,components,knot_candidate,linked,sequence\n";
            for (const CensusEntry& e : sum.entries)
                s << e.mask << "," << e.components << "," << int(e.knot_candidate) << ","
                  << int(e.linked) << "," << e.sequence << "\n";
        } else {
            s << "assignments: " << sum.entries.size() << "\n"
              << "knot candidates: " << sum.knot_candidates << "\n"
              << "unknot reducible: " << sum.unknot_reducible << "\n"
              << "multi component: " << sum.multi_component << "\n"
              << "linked: " << sum.linked << "\n";
        }
        return 0;
    }

    const NumberingSequence seq = floor_numbering(d);
    const CrossingMatrix cm = crossing_matrix(seq);
    if (cfg.format == "json") {
        ojson j;
        j["strands"] = d.strands();
        j["rungs"] = seq.rung_count();
        j["sequence"] = seq.string();
        j["closed"] = seq.closed_string();
        j["first"] = cm.first;
        j["second"] = cm.second;
        j["first_sum"] = cm.first_sum();
        j["second_sum"] = cm.second_sum();
        j["verdict"] = verdict_str(cm.verdict);
        s << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        s << "column,first,second\n";
        for (std::size_t i = 0; i < cm.first.size(); ++i)
            s << i << "," << cm.first[i] << "," << cm.second[i] << "\n";
    } else {
        s << "closed " << seq.closed_string() << "\n"
          << "first " << join(cm.first, " ") << " (sum " << cm.first_sum() << ")\n"
          << "second " << join(cm.second, " ") << " (sum " << cm.second_sum() << ")\n"
          << "verdict " << verdict_str(cm.verdict) << "\n";
    }
    return 0;
}

// ------------------------------------------------------- jones / vassiliev

struct DiagramOpts {
    std::string pd;
    std::string braid;
    unsigned strands = 0;
    unsigned jmax = 4;
};

PlanarDiagram load_diagram(const DiagramOpts& o) {
    const bool has_pd = !o.pd.empty();
    const bool has_braid = !o.braid.empty();
    if (has_pd == has_braid) throw UsageError("pass exactly one of --pd/--braid");
    if (has_pd) return pd_from_json(slurp(resolve_input(o.pd, "pd")));
    return braid_closure(parse_int_list(o.braid), o.strands);
}

int run_jones(const RunConfig& cfg, const DiagramOpts& o, std::ostream& s) {
    const PlanarDiagram d = load_diagram(o);
    const BracketOptions bo{cfg.crossing_cap, cfg.threads};
    const LaurentPoly v = jones_polynomial(d, bo);
    const int w = writhe(d);

    if (cfg.format == "json") {
        ojson j;
        j["writhe"] = w;
        j["variable"] = "t";
        ojson poly = ojson::object();
        for (const auto& [e, c] : v.terms()) poly[half_exp(e)] = c.str();
        j["polynomial"] = std::move(poly);
        s << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        s << "exponent,coefficient\n";
        for (const auto& [e, c] : v.terms()) s << half_exp(e) << "," << c.str() << "\n";
    } else {
        s << to_string(v, "t", 2) << "\n";
    }
    return 0;
}

int run_vassiliev(const RunConfig& cfg, const DiagramOpts& o, std::ostream& s) {
    const PlanarDiagram d = load_diagram(o);
    const BracketOptions bo{cfg.crossing_cap, cfg.threads};
    const std::vector<Rational> vs = vassiliev_coefficients(jones_polynomial(d, bo), o.jmax);

    if (cfg.format == "json") {
        ojson j;
        j["jmax"] = o.jmax;
        ojson arr = ojson::array();
        for (const Rational& v : vs) arr.push_back(rational_str(v));
        j["coefficients"] = std::move(arr);
        s << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        s << "j,coefficient\n";
        for (std::size_t j = 0; j < vs.size(); ++j) s << j << "," << rational_str(vs[j]) << "\n";
    } else {
        for (std::size_t j = 0; j < vs.size(); ++j)
            s << "v" << j << " = " << rational_str(vs[j]) << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- catalogue

struct CatalogueOpts {
    std::string knot;
    std::string mean;
    bool validate = false;
};

int run_catalogue(const RunConfig& cfg, const CatalogueOpts& o, std::ostream& s) {
    const int picked = int(!o.knot.empty()) + int(!o.mean.empty()) + int(o.validate);
    if (picked != 1) throw UsageError("pass exactly one of --knot/--mean/--validate");
    const Catalogue cat = Catalogue::load();

    if (!o.knot.empty()) {
        const CatalogueEntry& e = cat.entry(o.knot);
        if (cfg.format == "json") {
            ojson j;
            j["name"] = e.name;
            j["mean"] = e.mean;
            j["alternating"] = e.alternating;
            j["ambiguous_source"] = e.ambiguous_source;
            s << j.dump(2) << "\n";
        } else if (cfg.format == "csv") {
            s << "name,mean,alternating,ambiguous_source\n"
              << e.name << "," << join(e.mean, " ") << "," << int(e.alternating) << ","
              << int(e.ambiguous_source) << "\n";
        } else {
            s << e.name << ": mean [" << join(e.mean, ",") << "] "
              << (e.alternating ? "alternating" : "non-alternating")
              << (e.ambiguous_source ? " (ambiguous source)" : "") << "\n";
        }
        return 0;
    }

    if (!o.mean.empty()) {
        const std::vector<int> powers = TraceMonomial::parse(o.mean).trace_sizes();
        const std::vector<std::string> knots = cat.knots_for_mean(powers);
        if (cfg.format == "json") {
            ojson j;
            j["mean"] = powers;
            j["knots"] = knots;
            s << j.dump(2) << "\n";
        } else if (cfg.format == "csv") {
            s << "knot\n";
            for (const auto& k : knots) s << k << "\n";
        } else {
            s << (knots.empty() ? std::string("none") : join(knots, " ")) << "\n";
        }
        return 0;
    }

    const CatalogueReport rep = cat.validate(cfg.moments());
    if (cfg.format == "json") {
        ojson j;
        j["entries"] = rep.entries;
        j["replica_checked"] = rep.replica_checked;
        j["ok"] = rep.ok();
        j["problems"] = rep.problems;
        s << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        s << "entries,replica_checked,ok,problems\n"
          << rep.entries << "," << rep.replica_checked << "," << int(rep.ok()) << ","
          << rep.problems.size() << "\n";
    } else {
        s << "entries: " << rep.entries << "\n"
          << "replica checked: " << rep.replica_checked << "\n";
        for (const auto& p : rep.problems) s << "problem: " << p << "\n";
        s << (rep.ok() ? "ok" : "NOT ok") << "\n";
    }
    return rep.ok() ? 0 : 1;
}

// -------------------------------------------------------------- reproduce

struct ReproduceOpts {
    std::string target;
    unsigned gmax = 40;
};

int reproduce_series_pins(std::ostream& s) {
    static const std::vector<std::pair<std::vector<unsigned>, const char*>> pins = {
        {{8, 4, 4}, "11/1152"},  {{8, 5, 3}, "11/1440"},  {{8, 6, 2}, "47/11520"},
        {{7, 7, 2}, "53/11520"}, {{7, 6, 3}, "347/34560"}, {{7, 5, 4}, "89/5760"},
        {{6, 6, 4}, "623/34560"}, {{6, 5, 5}, "511/23040"},
    };
    const MultiSeries series = replica_generating_series(3, 16);
    bool ok = true;
    for (const auto& [key, expect] : pins) {
        const Rational want(expect);
        const Rational got = series.coefficient(key);
        const bool match = got == want;
        ok = ok && match;
        s << "sigma[" << join(key, ",") << "] expected " << want.str() << " computed "
          << got.str() << (match ? " ok" : " MISMATCH") << "\n";
    }
    s << (ok ? "eq9: all 8 coefficients match\n" : "eq9: MISMATCH\n");
    return ok ? 0 : 1;
}

int reproduce_table(const RunConfig& cfg, std::ostream& s) {
    const Catalogue cat = Catalogue::load();
    const MomentOptions mo = cfg.moments();
    const CatalogueReport rep = cat.validate(mo);
    for (const CatalogueEntry& e : cat.entries()) {
        const Rational r = replica_coefficient(cat.mean_for_knot(e.name), mo);
        s << e.name << " mean [" << join(e.mean, ",") << "] replica " << r.str()
          << (r != 0 ? " ok" : " MISMATCH") << "\n";
    }
    s << "entries " << rep.entries << " replica-checked " << rep.replica_checked << "\n";
    for (const auto& p : rep.problems) s << "problem: " << p << "\n";
    s << (rep.ok() ? "table-a: catalogue consistent\n" : "table-a: MISMATCH\n");
    return rep.ok() ? 0 : 1;
}

int reproduce_locus(const RunConfig& cfg, unsigned gmax, std::ostream& s) {
    RootFindOptions ro;
    ro.precision = cfg.precision;
    const auto sets = trivalent_zero_sweep(gmax, ro);

    constexpr double deg = 180.0 / std::numbers::pi;
    s << "g,re,im,modulus,arg_degrees,residual\n";
    double max_dev = 0, min_re = 1, max_abs_arg = 0;
    std::size_t off = 0;
    for (unsigned g = 1; g <= gmax; ++g) {
        const RootSet& set = sets[g - 1];
        for (const Root& r : set.roots)
            s << g << "," << fmt(r.value.real()) << "," << fmt(r.value.imag()) << ","
              << fmt(std::abs(r.value)) << "," << fmt(std::arg(r.value) * deg) << ","
              << fmt(r.residual) << "\n";
        const CircleReport cr = unit_circle_report(set, 1e-8);
        max_dev = std::max(max_dev, cr.max_deviation);
        off += cr.off_count;
        const ArcBounds ab = arc_bounds(set);
        min_re = std::min(min_re, ab.min_re);
        max_abs_arg = std::max(max_abs_arg, ab.max_abs_arg);
    }
    const EdgeFit fit = edge_exponent(sets);

    const bool circle_ok = off == 0;
    const bool arc_ok = min_re >= 0.5 - 1e-9 && max_abs_arg <= std::numbers::pi / 3 + 1e-9;
    const bool fit_ok = fit.exponent >= -0.65 && fit.exponent <= -0.35;
    s << "\n"
      << "max_circle_deviation " << fmt(max_dev) << " expected <1e-8 "
      << (circle_ok ? "ok" : "MISMATCH") << "\n"
      << "min_re " << fmt(min_re) << " max_abs_arg " << fmt(max_abs_arg)
      << " expected re>=1/2, |arg|<=pi/3 " << (arc_ok ? "ok" : "MISMATCH") << "\n"
      << "edge_exponent " << fmt(fit.exponent) << " expected in [-0.65,-0.35] "
      << (fit_ok ? "ok" : "MISMATCH") << " (fit residual " << fmt(fit.fit_residual)
      << ", " << fit.points << " points)\n";
    const bool ok = circle_ok && arc_ok && fit_ok;
    s << (ok ? "fig1: locus and density fit reproduced\n" : "fig1: MISMATCH\n");
    return ok ? 0 : 1;
}

int run_reproduce(const RunConfig& cfg, const ReproduceOpts& o, std::ostream& s) {
    if (o.target == "eq9") return reproduce_series_pins(s);
    if (o.target == "table-a") return reproduce_table(cfg, s);
    if (o.target == "fig1") return reproduce_locus(cfg, o.gmax, s);
    throw UnknownTarget("no reproduction target named '" + o.target + "'");
}

// -------------------------------------------------------------- top level

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--pairing-budget", cfg.pairing_budget,
                    "largest pairing count enumerated brute force")
        ->envname("KNOTMAT_PAIRING_BUDGET");
    sub->add_option("--memo-budget", cfg.memo_budget, "entry cap for the trace recursion memo")
        ->envname("KNOTMAT_MEMO_BUDGET");
    sub->add_option("--crossing-cap", cfg.crossing_cap,
                    "largest diagram the bracket state sum accepts")
        ->envname("KNOTMAT_CROSSING_CAP");
    sub->add_option("--rung-cap", cfg.rung_cap, "largest ladder the census enumerates")
        ->envname("KNOTMAT_RUNG_CAP");
    sub->add_option("--precision", cfg.precision, "working precision in significant digits (>= 15)")
        ->envname("KNOTMAT_PRECISION");
    sub->add_option("--threads", cfg.threads, "worker threads; 0 picks the hardware count")
        ->envname("KNOTMAT_THREADS");
    // no IsMember check here: CLI11 silently drops invalid environment
    // values, so resolve_format() vets both sources the same way
    sub->add_option("--format", cfg.format_flag, "output format: json, csv, or text")
        ->envname("KNOTMAT_FORMAT");
    sub->add_flag("--json", cfg.json_flag, "shorthand for --format json");
    sub->add_flag("--csv", cfg.csv_flag, "shorthand for --format csv");
    sub->add_flag("--text", cfg.text_flag, "shorthand for --format text");
    sub->add_option("--out", cfg.out_path, "write results to this file instead of stdout");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    MomentsOpts mo;
    SeriesOpts so;
    SeifertOpts fo;
    ZerosOpts zo;
    BandsOpts bo;
    DiagramOpts jo;
    DiagramOpts vo;
    CatalogueOpts co;
    ReproduceOpts ro;

    CLI::App app{"Exact Gaussian trace moments, replica series, band-ladder classification "
                 "and knot polynomial checks."};
    app.name("knotmat");
    app.set_version_flag("--version", "knotmat 1.0.0");
    app.require_subcommand(1);

    CLI::App* moments = app.add_subcommand("moments", "Exact Gaussian moments of trace monomials");
    moments->add_option("--traces", mo.traces, "trace powers like 3,3 or words like [AB],[AB]")
        ->required();
    moments->add_option("--coupling", mo.coupling, "cross covariance c for two-matrix words");
    add_common(moments, cfg);

    CLI::App* series =
        app.add_subcommand("replica-series", "Degree-D slice of the k-trace replica series");
    series->add_option("--traces", so.traces, "number of traces k")->check(CLI::PositiveNumber);
    series->add_option("--degree", so.degree, "total degree D of the emitted terms")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(series, cfg);

    CLI::App* seifert =
        app.add_subcommand("seifert", "Alexander polynomials of the plumbing and torus families");
    auto* genus_opt =
        seifert->add_option("--genus", fo.genus, "genus of the plumbed surface")
            ->check(CLI::PositiveNumber);
    seifert->add_option("--torus", fo.torus, "odd parameter n of the (2,n) torus knot")
        ->check(CLI::PositiveNumber)
        ->excludes(genus_opt);
    add_common(seifert, cfg);

    CLI::App* zeros = app.add_subcommand("zeros", "High-precision Alexander zero sweeps");
    zeros->add_option("--family", zo.family, "polynomial family")
        ->check(CLI::IsMember({"trivalent"}));
    auto* gmax_opt = zeros->add_option("--gmax", zo.gmax, "largest genus of the sweep")
                         ->check(CLI::PositiveNumber);
    zeros->add_option("--torus", zo.torus, "roots of one (2,n) torus polynomial instead")
        ->check(CLI::PositiveNumber)
        ->excludes(gmax_opt);
    add_common(zeros, cfg);

    CLI::App* bands =
        app.add_subcommand("bands", "Floor numberings and sign censuses of band ladders");
    bands->add_option("--skeleton", bo.skeleton, "ladder JSON file (cwd or shipped data)")
        ->required();
    auto* census_flag =
        bands->add_flag("--census", bo.census, "classify every over/under assignment");
    auto* signs_opt = bands->add_option("--signs", bo.signs, "rung signs as o/u letters")
                          ->excludes(census_flag);
    bands->add_flag("--alternating", bo.alternating, "use the alternating assignment")
        ->excludes(census_flag)
        ->excludes(signs_opt);
    add_common(bands, cfg);

    CLI::App* jones =
        app.add_subcommand("jones", "Jones polynomial from a planar diagram or braid word");
    jones->add_option("--pd", jo.pd, "planar diagram JSON file");
    jones->add_option("--braid", jo.braid, "braid word like 1,1,1 (negative = inverse letter)");
    jones->add_option("--strands", jo.strands, "braid width override");
    add_common(jones, cfg);

    CLI::App* vassiliev =
        app.add_subcommand("vassiliev", "Finite-type coefficients from the Jones expansion");
    vassiliev->add_option("--pd", vo.pd, "planar diagram JSON file");
    vassiliev->add_option("--braid", vo.braid, "braid word like 1,1,1 (negative = inverse letter)");
    vassiliev->add_option("--strands", vo.strands, "braid width override");
    vassiliev->add_option("--jmax", vo.jmax, "highest order to report");
    add_common(vassiliev, cfg);

    CLI::App* catalogue =
        app.add_subcommand("catalogue", "Knot to Gaussian-mean lookups and table validation");
    auto* knot_opt = catalogue->add_option("--knot", co.knot, "entry by knot name");
    auto* mean_opt = catalogue->add_option("--mean", co.mean, "knots sharing these trace powers")
                         ->excludes(knot_opt);
    catalogue->add_flag("--validate", co.validate, "recheck the whole table")
        ->excludes(knot_opt)
        ->excludes(mean_opt);
    add_common(catalogue, cfg);

    CLI::App* reproduce =
        app.add_subcommand("reproduce", "Recompute pinned reference values and compare (text report)");
    reproduce->add_option("target", ro.target, "eq9, table-a, or fig1")->required();
    reproduce->add_option("--gmax", ro.gmax, "sweep depth for fig1")->check(CLI::PositiveNumber);
    add_common(reproduce, cfg);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    std::ostringstream sink;
    int code = 0;
    try {
        app.parse(rev);
        validate_config(cfg);
        cfg.format = resolve_format(cfg);
        if (app.got_subcommand(moments))
            code = run_moments(cfg, mo, sink);
        else if (app.got_subcommand(series))
            code = run_series(cfg, so, sink);
        else if (app.got_subcommand(seifert))
            code = run_seifert(cfg, fo, sink);
        else if (app.got_subcommand(zeros))
            code = run_zeros(cfg, zo, sink);
        else if (app.got_subcommand(bands))
            code = run_bands(cfg, bo, sink);
        else if (app.got_subcommand(jones))
            code = run_jones(cfg, jo, sink);
        else if (app.got_subcommand(vassiliev))
            code = run_vassiliev(cfg, vo, sink);
        else if (app.got_subcommand(catalogue))
            code = run_catalogue(cfg, co, sink);
        else if (app.got_subcommand(reproduce))
            code = run_reproduce(cfg, ro, sink);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 1;
    } catch (const CapExceeded& e) {
        err << "error: cap-exceeded: " << e.what() << "\n";
        return 2;
    } catch (const NoConvergence& e) {
        err << "error: no-convergence: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << kind_of(e) << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: invalid: " << e.what() << "\n";
        return 1;
    }

    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) {
            err << "error: io: cannot write '" << cfg.out_path << "'\n";
            return 1;
        }
        f << sink.str();
        f.flush();
        if (!f) {
            err << "error: io: short write to '" << cfg.out_path << "'\n";
            return 1;
        }
    } else {
        out << sink.str();
    }
    return code;
}

} // namespace knotmat::cli
