#include "command.hpp"

#include "cpsurgery/cache.hpp"
#include "cpsurgery/errors.hpp"
#include "cpsurgery/forgetful.hpp"
#include "cpsurgery/io.hpp"
#include "cpsurgery/kerj.hpp"
#include "cpsurgery/obstruction.hpp"
#include "cpsurgery/reproduce.hpp"

#include "CLI11.hpp"

#include <future>
#include <optional>
#include <sstream>

namespace cpsurgery::cli {

namespace {

struct Params {
    int n = -1;
    int l = -1;
    int k = -1;
    std::string format = "text";
    bool no_cache = false;
    bool include_sphere = false;
    bool index2 = false;
    bool divisible = false;
    std::optional<int> tower_top;
    std::string invariants;
    std::string coords;
    std::vector<int> tables;
    std::string golden_dir;
};

IntVector parse_list(const std::string& s, const char* what)
{
    IntVector v;
    if (s.empty())
        return v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            v.push_back(parse_integer(item));
        } catch (const ValidationError&) {
            throw ValidationError(std::string("bad entry in ") + what + ": '" + item + "'");
        }
    return v;
}

void need(bool ok, const std::string& msg)
{
    if (!ok)
        throw ValidationError(msg);
}

std::string cache_key(const std::string& verb, const Params& p)
{
    std::ostringstream os;
    os << "cpsurgery " << code_version() << "|" << verb << "|n=" << p.n << "|l=" << p.l << "|k=" << p.k
       << "|fmt=" << p.format << "|sphere=" << p.include_sphere << "|index2=" << p.index2
       << "|div2=" << p.divisible << "|tower=" << (p.tower_top ? std::to_string(*p.tower_top) : "default")
       << "|inv=" << p.invariants << "|coords=" << p.coords;
    return os.str();
}

std::string compute(const std::string& verb, const Params& p, Format f)
{
    GeneratorOptions opts;
    opts.tower_top = p.tower_top;
    if (verb == "ranks") {
        need(p.n >= 0 && p.k >= 0, "ranks needs --n and --k");
        return render_ranks(p.n, p.k, f);
    }
    need(p.n >= 0 && p.l >= 0, verb + " needs --n and --l");
    if (verb == "kerj") {
        if (p.l == 0) {
            need(!p.coords.empty(), "kerj --l 0 decides membership; pass --coords c1,c2,...");
            KOElement xi = KOElement::zero(p.n, 0);
            IntVector c = parse_list(p.coords, "--coords");
            need(c.size() == xi.coords.size(),
                 "--coords needs " + std::to_string(xi.coords.size()) + " entries for n = " + std::to_string(p.n));
            xi.coords = c;
            MembershipResult m = membership_l0(xi, p.n);
            if (f == Format::json) {
                json beta = json::array();
                for (const auto& b : m.beta)
                    beta.push_back(to_json(b));
                return dump(json{{"n", p.n},
                                 {"l", 0},
                                 {"member", m.member},
                                 {"v_membership_only", m.v_membership_only},
                                 {"beta", beta}});
            }
            std::string s = m.member ? "member" : "not a member";
            if (m.v_membership_only)
                s += " (of V; index 2 ambiguity for n = 1 mod 4)";
            return f == Format::csv ? "n,member\n" + std::to_string(p.n) + "," + (m.member ? "1" : "0") + "\n"
                                    : s + "\n";
        }
        return render_kerj(canonical_generators(p.n, p.l, opts), f);
    }
    if (verb == "obstruction") {
        GeneratorSet gs = canonical_generators(p.n, p.l, opts);
        return render_obstruction(obstruction_form(p.n, p.l, gs), total_pontryagin(gs, p.include_sphere), f);
    }
    if (verb == "pontryagin")
        return render_pontryagin(total_pontryagin(canonical_generators(p.n, p.l, opts), p.include_sphere), f);
    if (verb == "forgetful")
        return render_forgetful(matrix_bundle(p.n, p.l, p.index2 ? RootsMode::index2 : RootsMode::identity, opts), f);
    if (verb == "congruences")
        return render_congruences(congruences(p.n, p.l, opts), f);
    if (verb == "check") {
        need(!p.invariants.empty(), "check needs --invariants v1,v2,...");
        return render_check(p.n, p.l, check_invariants(parse_list(p.invariants, "--invariants"), p.n, p.l, p.divisible),
                            f);
    }
    throw ValidationError("unknown verb " + verb);
}

Outcome reproduce(const Params& p, Format f)
{
    std::vector<int> tables = p.tables.empty() ? available_tables() : p.tables;
    const std::filesystem::path dir = p.golden_dir.empty() ? default_golden_dir() : std::filesystem::path(p.golden_dir);
    // load everything first so a bad table number or file fails before any work
    std::vector<json> golden;
    for (int t : tables)
        golden.push_back(load_golden(t, dir));
    std::vector<std::future<TableReport>> jobs;
    for (size_t i = 0; i < tables.size(); ++i)
        jobs.push_back(std::async(std::launch::async, [t = tables[i], &g = golden[i]] { return reproduce_table(t, g); }));
    std::vector<TableReport> reports;
    for (auto& j : jobs)
        reports.push_back(j.get());
    Outcome o;
    o.out = render_reproduce(reports, f);
    for (const auto& r : reports)
        if (!r.pass())
            o.exit_code = 2;
    return o;
}

}  // namespace

Outcome run(const std::vector<std::string>& args)
{
    CLI::App app{"Smooth structures on CP^n x D^{2l}: ker J generators, obstructions, forgetful matrices"};
    app.require_subcommand(1);
    app.set_version_flag("--version", code_version());
    Params p;

    auto common = [&](CLI::App* s, bool use_k) {
        s->add_option("--n", p.n, "complex dimension n")->required()->check(CLI::NonNegativeNumber);
        if (use_k)
            s->add_option("--k", p.k, "suspension degree k")->required()->check(CLI::NonNegativeNumber);
        else
            s->add_option("--l", p.l, "half the disk dimension")->required()->check(CLI::NonNegativeNumber);
        s->add_option("--format", p.format, "json, csv, latex or text")
            ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
        s->add_flag("--no-cache", p.no_cache, "bypass the result cache");
        if (!use_k)
            s->add_option("--tower-top", p.tower_top, "level whose generators are restricted down to n");
    };
    common(app.add_subcommand("ranks", "free ranks t', t, eps, r_l"), true);
    auto* kerj = app.add_subcommand("kerj", "generators of ker J");
    common(kerj, false);
    kerj->add_option("--coords", p.coords, "l = 0: coordinates to test for membership");
    auto* obs = app.add_subcommand("obstruction", "surgery obstruction form and Pontryagin classes");
    common(obs, false);
    obs->add_flag("--include-sphere", p.include_sphere, "list the sphere term in the classes");
    auto* pont = app.add_subcommand("pontryagin", "total Pontryagin class");
    common(pont, false);
    pont->add_flag("--include-sphere", p.include_sphere, "list the sphere term in the classes");
    auto* fg = app.add_subcommand("forgetful", "A', P and A for the forgetful map");
    common(fg, false);
    fg->add_flag("--index2-mode", p.index2, "n + l odd: also list every index-2 choice of P");
    common(app.add_subcommand("congruences", "congruences on the splitting invariants"), false);
    auto* chk = app.add_subcommand("check", "test splitting invariants against the congruences");
    common(chk, false);
    chk->add_option("--invariants", p.invariants, "comma separated integers")->required();
    chk->add_flag("--divisible-by-two", p.divisible, "the structure is divisible by 2");
    auto* rep = app.add_subcommand("reproduce", "regenerate the tables and diff against golden files");
    rep->add_option("--table", p.tables, "table number (repeatable); default all");
    rep->add_option("--golden-dir", p.golden_dir, "directory with table<k>.json");
    rep->add_option("--format", p.format, "json, csv, latex or text")
        ->check(CLI::IsMember({"json", "csv", "latex", "text"}));

    Outcome o;
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        o.out = out.str();
        o.err = err.str();
        o.exit_code = code == 0 ? 0 : 1;
        return o;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        const Format f = parse_format(p.format);
        if (verb == "reproduce")
            return reproduce(p, f);
        ResultCache cache = ResultCache::from_environment();
        const std::string key = cache_key(verb, p);
        if (!p.no_cache)
            if (auto hit = cache.load(key)) {
                o.out = *hit;
                return o;
            }
        o.out = compute(verb, p, f);
        if (!p.no_cache)
            cache.store(key, o.out);
    } catch (const ValidationError& e) {
        o.exit_code = 1;
        o.err = std::string("error: ") + e.what() + "\n";
    } catch (const ConsistencyError& e) {
        o.exit_code = 2;
        o.err = std::string("internal consistency failure: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        o.exit_code = 2;
        o.err = std::string("internal error: ") + e.what() + "\n";
    }
    return o;
}

}  // namespace cpsurgery::cli
