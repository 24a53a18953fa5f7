#include <CLI11.hpp>

#include <filesystem>
#include <future>
#include <iostream>

#include "approxdim/algebra_io.hpp"
#include "approxdim/corpus.hpp"
#include "approxdim/report.hpp"
#include "approxdim/rep_io.hpp"

using namespace approxdim;

namespace {

AlgebraPtr load_algebra_arg(const std::string& spec, std::uint32_t p)
{
    if (std::filesystem::exists(spec))
        return load_algebra_file(spec);
    for (const std::string& name : corpus_algebra_names())
        if (name == spec)
            return corpus_algebra(spec, p);
    fail(Errc::InvalidArgument,
         "'" + spec + "' is neither an algebra file nor a corpus algebra name");
}

std::string dims_str(const RepPtr& m)
{
    std::string s = "(";
    for (std::size_t v = 0; v < m->dims.size(); ++v) {
        if (v)
            s += ",";
        s += std::to_string(m->dims[v]);
    }
    return s + ")";
}

void print_json(const json& doc)
{
    std::cout << doc.dump(2) << "\n";
}

json preamble(std::uint64_t seed)
{
    return json{{"tool", "approxdim"}, {"version", kToolVersion}, {"seed", seed}};
}

struct Options {
    std::string algebra, module_spec, omega_spec, pair, check = "all";
    std::string method = "both", direction = "forward", save;
    int cutoff = 12;
    std::uint64_t seed = 0;
    std::uint32_t field = kDefaultPrime;
    bool json_out = false;
};

int cmd_algebra_check(const Options& opt)
{
    AlgebraPtr a = load_algebra_arg(opt.algebra, opt.field);
    json doc = preamble(opt.seed);
    doc["algebra"] = {{"dim", a->dim()},
                      {"vertices", a->vertex_count()},
                      {"arrows", a->quiver().arrows.size()},
                      {"loewy_bound", a->loewy_bound()},
                      {"field", a->field().p()}};
    json blocks = json::array();
    for (const auto& b : a->blocks()) {
        json verts = json::array();
        for (int v : b.vertices)
            verts.push_back(v + 1);
        blocks.push_back({{"vertices", std::move(verts)}, {"semisimple", b.semisimple}});
    }
    doc["blocks"] = std::move(blocks);
    bool ok = true;
    if (!opt.module_spec.empty()) {
        RepPtr m = resolve_module_spec(a, opt.module_spec);
        ValidationReport vr = validate_module(*m);
        ok = vr.ok;
        doc["module"] = {{"dims", m->dims}, {"valid", vr.ok}};
    }
    doc["ok"] = ok;
    if (opt.json_out) {
        print_json(doc);
    } else {
        std::cout << "algebra: dim " << a->dim() << ", loewy bound " << a->loewy_bound()
                  << ", " << a->vertex_count() << " vertices, "
                  << a->quiver().arrows.size() << " arrows, field GF(" << a->field().p()
                  << ")\n";
        for (const auto& b : a->blocks()) {
            std::cout << "block:";
            for (int v : b.vertices)
                std::cout << " " << v + 1;
            std::cout << (b.semisimple ? " (semisimple)" : "") << "\n";
        }
        if (!opt.module_spec.empty())
            std::cout << "module " << opt.module_spec << ": "
                      << (ok ? "valid" : "INVALID") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_invariants(const Options& opt)
{
    AlgebraPtr a = load_algebra_arg(opt.algebra, opt.field);
    Rng rng(opt.seed);
    HypothesisReport rep = hypothesis_report(a, rng);
    if (opt.json_out) {
        json doc = preamble(opt.seed);
        doc["hypothesis_report"] = hypothesis_report_json(rep, a);
        print_json(doc);
    } else {
        std::cout << "nodes:";
        if (rep.node_vertices.empty())
            std::cout << " none";
        for (int v : rep.node_vertices)
            std::cout << " S" << v + 1;
        std::cout << "\nsemisimple blocks: " << rep.semisimple_blocks.size() << "\n";
        std::cout << "self-injective: " << (rep.self_injective ? "yes" : "no") << "\n";
        std::cout << "projective-injectives: " << rep.proj_inj.size() << "\n";
        std::cout << "transfer hypotheses: "
                  << (rep.valid_for_transfer() ? "satisfied" : "VIOLATED") << "\n";
    }
    return 0;
}

int cmd_lapp(const Options& opt, bool fadim_mode)
{
    AlgebraPtr a = load_algebra_arg(opt.algebra, opt.field);
    RepPtr omega = resolve_module_spec(a, opt.omega_spec);
    Rng rng(opt.seed);
    AddClass cls = add_class(omega, rng);
    RepPtr m = fadim_mode ? regular_module(a) : resolve_module_spec(a, opt.module_spec);
    ApproximationChain chain = lapp_chain(cls, m, opt.cutoff);
    if (opt.json_out) {
        json doc = preamble(opt.seed);
        doc["cutoff"] = opt.cutoff;
        doc["value"] = chain.verdict.render();
        doc["chain"] = chain_json(chain);
        print_json(doc);
    } else {
        std::cout << chain.verdict.render() << "\n";
    }
    return 0;
}

int cmd_domdim(const Options& opt)
{
    AlgebraPtr a = load_algebra_arg(opt.algebra, opt.field);
    RepPtr m = resolve_module_spec(a, opt.module_spec);
    Rng rng(opt.seed);
    json doc = preamble(opt.seed);
    doc["cutoff"] = opt.cutoff;
    if (opt.method == "lapp" || opt.method == "coresolution") {
        DomDimMethod method =
            opt.method == "lapp" ? DomDimMethod::Lapp : DomDimMethod::Coresolution;
        ExtendedNat v = domdim(m, opt.cutoff, method, rng);
        if (opt.json_out) {
            doc["method"] = opt.method;
            doc["value"] = v.render();
            print_json(doc);
        } else
            std::cout << v.render() << "\n";
        return 0;
    }
    require(opt.method == "both", Errc::InvalidArgument,
            "--method must be lapp, coresolution or both");
    ExtendedNat l = domdim(m, opt.cutoff, DomDimMethod::Lapp, rng);
    ExtendedNat c = domdim(m, opt.cutoff, DomDimMethod::Coresolution, rng);
    bool agree = cap_equal(l, c);
    if (opt.json_out) {
        doc["lapp"] = l.render();
        doc["coresolution"] = c.render();
        doc["agree"] = agree;
        print_json(doc);
    } else {
        std::cout << l.render() << " / " << c.render() << (agree ? " (agree)" : " (DISAGREE)")
                  << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_tau(const Options& opt)
{
    AlgebraPtr a = load_algebra_arg(opt.algebra, opt.field);
    RepPtr m = resolve_module_spec(a, opt.module_spec);
    require(opt.direction == "forward" || opt.direction == "inverse", Errc::InvalidArgument,
            "--direction must be forward or inverse");
    RepPtr t = opt.direction == "forward" ? tau(m) : tau_inverse(m);
    Rng rng(opt.seed);
    auto classes = decompose_classes(t, rng);
    if (!opt.save.empty())
        save_module_file(*t, opt.save);
    if (opt.json_out) {
        json doc = preamble(opt.seed);
        doc["direction"] = opt.direction;
        doc["dims"] = t->dims;
        json parts = json::array();
        for (const auto& c : classes)
            parts.push_back({{"dims", c.representative->dims},
                             {"multiplicity", c.multiplicity}});
        doc["parts"] = std::move(parts);
        print_json(doc);
    } else {
        std::cout << "tau" << (opt.direction == "inverse" ? "^{-1}" : "") << " "
                  << opt.module_spec << " = dims " << dims_str(t);
        if (t->is_zero())
            std::cout << " (zero)";
        std::cout << "\n";
        for (const auto& c : classes)
            std::cout << "  part " << dims_str(c.representative) << " x " << c.multiplicity
                      << "\n";
    }
    return 0;
}

int cmd_decompose(const Options& opt)
{
    AlgebraPtr a = load_algebra_arg(opt.algebra, opt.field);
    RepPtr m = resolve_module_spec(a, opt.module_spec);
    Rng rng(opt.seed);
    auto classes = decompose_classes(m, rng);
    if (opt.json_out) {
        json doc = preamble(opt.seed);
        doc["dims"] = m->dims;
        json parts = json::array();
        for (const auto& c : classes)
            parts.push_back({{"dims", c.representative->dims},
                             {"multiplicity", c.multiplicity}});
        doc["parts"] = std::move(parts);
        print_json(doc);
    } else {
        std::cout << opt.module_spec << " " << dims_str(m) << " =";
        if (classes.empty())
            std::cout << " 0";
        for (const auto& c : classes)
            std::cout << " " << dims_str(c.representative) << "^" << c.multiplicity;
        std::cout << "\n";
    }
    return 0;
}

int cmd_check_tilting(const Options& opt)
{
    AlgebraPtr a = load_algebra_arg(opt.algebra, opt.field);
    RepPtr omega = resolve_module_spec(a, opt.omega_spec);
    Rng rng(opt.seed);
    TiltingVerdict v = is_tilting(omega, opt.cutoff, rng);
    std::string verdict = v.kind == TiltingVerdict::Kind::Yes
                              ? "yes(" + std::to_string(v.n) + ")"
                              : (v.kind == TiltingVerdict::Kind::No ? "no" : "inconclusive");
    if (opt.json_out) {
        json doc = preamble(opt.seed);
        doc["cutoff"] = opt.cutoff;
        doc["verdict"] = verdict;
        if (v.kind != TiltingVerdict::Kind::Yes)
            doc["reason"] = v.reason;
        print_json(doc);
    } else {
        std::cout << verdict;
        if (v.kind != TiltingVerdict::Kind::Yes)
            std::cout << ": " << v.reason;
        std::cout << "\n";
    }
    return v.kind == TiltingVerdict::Kind::No ? 1 : 0;
}

int cmd_check_wakamatsu(const Options& opt)
{
    AlgebraPtr a = load_algebra_arg(opt.algebra, opt.field);
    RepPtr omega = resolve_module_spec(a, opt.omega_spec);
    Rng rng(opt.seed);
    WakamatsuVerdict v = is_wakamatsu(omega, opt.cutoff, rng);
    std::string verdict = v.kind == WakamatsuVerdict::Kind::Certified ? "certified"
                          : v.kind == WakamatsuVerdict::Kind::UpToCutoff ? "up_to_cutoff"
                                                                         : "no";
    if (opt.json_out) {
        json doc = preamble(opt.seed);
        doc["cutoff"] = opt.cutoff;
        doc["verdict"] = verdict;
        doc["reason"] = v.reason;
        print_json(doc);
    } else {
        std::cout << verdict << ": " << v.reason << "\n";
    }
    return v.kind == WakamatsuVerdict::Kind::No ? 1 : 0;
}

int cmd_verify(const Options& opt)
{
    std::vector<std::string> pair_names;
    if (opt.pair == "all")
        pair_names = curated_pair_names();
    else
        pair_names = {opt.pair};
    std::vector<CheckKind> kinds;
    if (opt.check == "all")
        kinds = all_checks();
    else
        kinds = {parse_check(opt.check)};

    // fan the (pair, check) grid out concurrently; assembly stays ordered
    std::vector<PairSpec> pairs;
    for (const std::string& pname : pair_names)
        pairs.push_back(curated_pair(pname, opt.field));
    std::vector<std::future<CheckRun>> futures;
    for (const PairSpec& pair : pairs)
        for (CheckKind kind : kinds)
            futures.push_back(std::async(std::launch::async, [&pair, kind, &opt] {
                // a private memo per run keeps the output independent of
                // scheduling while still deduplicating within the sweep
                PairSpec run_pair = pair;
                run_pair.cache = std::make_shared<TransportCache>();
                return run_check(run_pair, kind, opt.cutoff, opt.seed);
            }));
    std::vector<CheckRun> runs;
    for (std::future<CheckRun>& f : futures)
        runs.push_back(f.get());
    bool all_pass = true;
    for (const CheckRun& run : runs)
        all_pass = all_pass && run.pass;
    if (opt.json_out) {
        print_json(emit_report(runs, opt.seed));
    } else {
        for (const CheckRun& run : runs) {
            std::size_t passed = 0;
            for (const CheckReport& r : run.reports)
                passed += r.pass ? 1 : 0;
            std::cout << run.pair << " " << check_name(run.kind) << ": " << passed << "/"
                      << run.reports.size() << " pass"
                      << (run.hypothesis_ok ? "" : " [hypothesis violated]")
                      << (run.pass ? "" : "  <-- FAIL") << "\n";
            for (const CheckReport& r : run.reports)
                if (!r.pass)
                    std::cout << "  FAIL " << r.inputs << ": lhs=" << r.lhs
                              << " rhs=" << r.rhs << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_corpus_list(const Options& opt)
{
    if (opt.json_out) {
        json doc = preamble(opt.seed);
        json algebras = json::array();
        for (const std::string& name : corpus_algebra_names())
            algebras.push_back({{"name", name},
                                {"description", corpus_algebra_description(name)}});
        doc["algebras"] = std::move(algebras);
        json pairs = json::array();
        for (const std::string& name : curated_pair_names()) {
            PairSpec p = curated_pair(name, opt.field);
            pairs.push_back({{"name", name},
                             {"functor", p.functor.describe()},
                             {"negative_control", p.negative_control}});
        }
        doc["pairs"] = std::move(pairs);
        print_json(doc);
    } else {
        std::cout << "algebras:\n";
        for (const std::string& name : corpus_algebra_names())
            std::cout << "  " << name << "  " << corpus_algebra_description(name) << "\n";
        std::cout << "pairs:\n";
        for (const std::string& name : curated_pair_names()) {
            PairSpec p = curated_pair(name, opt.field);
            std::cout << "  " << name << "  functor=" << p.functor.describe()
                      << (p.negative_control ? "  (negative control)" : "") << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact computations of add-omega approximation dimensions, AR translates "
                 "and stable-equivalence transfers for bound quiver algebras over GF(p)"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--cutoff", opt.cutoff, "chain/resolution cutoff (default 12)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for all randomized procedures (default 0)");
    app.add_option("--field", opt.field, "prime field modulus (default 32003)");
    app.add_flag("--json", opt.json_out, "emit a JSON document on stdout");

    auto configure = [&](CLI::App* sub) {
        sub->fallthrough();
        return sub;
    };
    auto add_algebra = [&](CLI::App* sub, bool required = true) {
        auto* o = sub->add_option("--algebra", opt.algebra,
                                  "algebra file or corpus name (a3, nak33, ...)");
        if (required)
            o->required();
    };
    auto add_module = [&](CLI::App* sub, bool required = true) {
        auto* o = sub->add_option(
            "--module", opt.module_spec,
            "module file or one of regular|coregular|projinj|zero|P<i>|I<i>|S<i>");
        if (required)
            o->required();
    };
    auto add_omega = [&](CLI::App* sub) {
        sub->add_option("--omega", opt.omega_spec, "module file or symbolic specifier")
            ->required();
    };

    CLI::App* c_algebra = configure(app.add_subcommand("algebra-check",
                                             "parse and validate an algebra presentation"));
    add_algebra(c_algebra);
    add_module(c_algebra, false);

    CLI::App* c_inv = configure(app.add_subcommand(
        "invariants", "nodes, semisimple blocks and self-injectivity"));
    add_algebra(c_inv);

    CLI::App* c_lapp = configure(app.add_subcommand("lapp", "omega-left approximation dimension"));
    add_algebra(c_lapp);
    add_omega(c_lapp);
    add_module(c_lapp);

    CLI::App* c_fadim = configure(app.add_subcommand("fadim", "faithful dimension of omega"));
    add_algebra(c_fadim);
    add_omega(c_fadim);

    CLI::App* c_dom = configure(app.add_subcommand("domdim", "dominant dimension of a module"));
    add_algebra(c_dom);
    add_module(c_dom);
    c_dom->add_option("--method", opt.method, "lapp | coresolution | both (default both)");

    CLI::App* c_tau = configure(app.add_subcommand("tau", "Auslander-Reiten translate"));
    add_algebra(c_tau);
    add_module(c_tau);
    c_tau->add_option("--direction", opt.direction, "forward | inverse (default forward)");
    c_tau->add_option("--save", opt.save, "write the translate to a module file");

    CLI::App* c_dec = configure(app.add_subcommand(
        "decompose", "indecomposable decomposition of a module"));
    add_algebra(c_dec);
    add_module(c_dec);

    CLI::App* c_tilt = configure(app.add_subcommand("check-tilting", "tilting certification"));
    add_algebra(c_tilt);
    add_omega(c_tilt);

    CLI::App* c_wak = configure(app.add_subcommand(
        "check-wakamatsu", "Wakamatsu tilting certification"));
    add_algebra(c_wak);
    add_omega(c_wak);

    CLI::App* c_verify = configure(app.add_subcommand(
        "verify", "run stable-equivalence transfer checks on curated pairs"));
    c_verify->add_option("--pair", opt.pair, "curated pair name, or 'all'")->required();
    c_verify->add_option("--check", opt.check,
                         "thm35|fadim|domdim|extiso|wakamatsu|tilting|phipsi|torsionfree|"
                         "ntorsionfree|gdimzero|gorproj|wtc|all (default all)");

    configure(app.add_subcommand("corpus-list", "list compiled-in algebras and pairs"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("algebra-check"))
            return cmd_algebra_check(opt);
        if (app.got_subcommand("invariants"))
            return cmd_invariants(opt);
        if (app.got_subcommand("lapp"))
            return cmd_lapp(opt, false);
        if (app.got_subcommand("fadim"))
            return cmd_lapp(opt, true);
        if (app.got_subcommand("domdim"))
            return cmd_domdim(opt);
        if (app.got_subcommand("tau"))
            return cmd_tau(opt);
        if (app.got_subcommand("decompose"))
            return cmd_decompose(opt);
        if (app.got_subcommand("check-tilting"))
            return cmd_check_tilting(opt);
        if (app.got_subcommand("check-wakamatsu"))
            return cmd_check_wakamatsu(opt);
        if (app.got_subcommand("verify"))
            return cmd_verify(opt);
        if (app.got_subcommand("corpus-list"))
            return cmd_corpus_list(opt);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        return e.is_input_error() ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
