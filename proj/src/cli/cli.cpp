#include "kch/cli/cli.hpp"

#include "commands.hpp"
#include "kch/augpoly/commpoly.hpp"
#include "kch/errors.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace kch::cli {

namespace {

struct Options {
    std::string braid;
    std::vector<std::string> braids;
    int n = 0;
    std::string mode = "topological";
    int64_t prime = 3;
    bool json = false;
    std::string star = "default";
    bool noncommutative = false;
    std::string method = "resultant";
    std::string homfly_file;
    bool no_cache = false;
    bool hat = false;
    bool enumerate = false;
    bool two_var = false;
    bool verify = false;
    std::string aug;
    std::string coeff = "Z";
    std::string fixture;
    std::string name;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json braid_input(const std::string &word, int n) {
    BraidWord b = parse_braid(word, n > 0 ? std::optional<int>(n) : std::nullopt);
    return {{"braid", b.to_string()}, {"strands", b.strands()}};
}

void render(std::ostream &out, const json &j, int indent) {
    std::string pad(indent, ' ');
    auto scalar = [](const json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [](const json &v) {
        return v.is_primitive() ||
               (v.is_array() && std::all_of(v.begin(), v.end(),
                                            [](const json &x) { return x.is_primitive(); }));
    };
    auto line = [&](const json &v) {
        if (v.is_primitive())
            return scalar(v);
        std::string s;
        for (const auto &x : v)
            s += (s.empty() ? "" : ", ") + scalar(x);
        return s.empty() ? std::string("(none)") : s;
    };
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            if (flat(v)) {
                out << pad << k << ": " << line(v) << '\n';
            } else {
                out << pad << k << ":\n";
                render(out, v, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto &v : j) {
            if (flat(v)) {
                out << pad << "- " << line(v) << '\n';
            } else {
                out << pad << "-\n";
                render(out, v, indent + 2);
            }
        }
    } else {
        out << pad << scalar(j) << '\n';
    }
}

void add_braid(CLI::App *s, Options &o) {
    s->add_option("--braid", o.braid, "braid word, e.g. \"1 1 -2\" or \"s1^3 s2^-1\"");
    s->add_option("--n", o.n, "number of strands (default: 1 + largest generator)");
}

void add_dga_flags(CLI::App *s, Options &o) {
    s->add_option("--mode", o.mode, "topological, transverse, transverse-uv or hat");
    s->add_option("--star", o.star, "extra strand for the phi matrices: 0 or n+1");
    s->add_flag("--noncommutative", o.noncommutative, "fully noncommutative algebra");
}

void add_common(CLI::App *s, Options &o) {
    s->add_flag("--json", o.json, "emit the JSON envelope");
    s->add_flag("--no-cache", o.no_cache, "neither read nor write the result cache");
}

json dga_input(const Options &o) {
    json in = braid_input(o.braid, o.n);
    in["mode"] = o.mode;
    in["star"] = o.star;
    in["noncommutative"] = o.noncommutative;
    return in;
}

json homfly_input(const Options &o, json in) {
    if (!o.homfly_file.empty()) {
        std::string text = read_file(o.homfly_file);
        in["homfly"] = parse_commpoly(text, {"a", "q"}).to_string();
    }
    return in;
}

struct Request {
    std::string command;
    std::string mode;
    json input;
    std::function<json(const json &)> compute;
    bool cacheable = true;
};

Request make_request(const std::string &cmd, const Options &o) {
    Request r;
    r.command = cmd;
    if (cmd == "dga" || cmd == "d2-check") {
        r.input = dga_input(o);
        r.mode = o.mode;
        r.compute = cmd == "dga" ? cmd_dga : cmd_d2_check;
    } else if (cmd == "aug-count" || cmd == "aug-enum") {
        r.input = dga_input(o);
        if (o.hat)
            r.input["mode"] = "hat";
        r.input["prime"] = o.prime;
        r.mode = r.input["mode"];
        bool enumerate = cmd == "aug-enum" || o.enumerate;
        r.input["enumerate"] = enumerate;
        r.compute = [enumerate](const json &in) { return cmd_aug_count(in, enumerate); };
    } else if (cmd == "linhom") {
        r.input = dga_input(o);
        r.input["aug"] = o.aug;
        r.input["coeff"] = o.coeff;
        if (o.coeff == "Fp")
            r.input["prime"] = o.prime;
        r.mode = o.mode;
        r.compute = cmd_linhom;
    } else if (cmd == "augpoly" || cmd == "homfly-check") {
        r.input = homfly_input(o, braid_input(o.braid, o.n));
        r.input["method"] = o.method;
        bool two = cmd == "augpoly" && o.two_var;
        if (cmd == "augpoly")
            r.input["two_var"] = two;
        r.mode = two ? "two-variable" : "three-variable";
        r.compute = cmd == "augpoly" ? cmd_augpoly : cmd_homfly_check;
    } else if (cmd == "compare-transverse") {
        json bs = json::array();
        if (!o.fixture.empty()) {
            if (!o.braids.empty())
                throw DomainError("give either --fixture or two --braid options");
            for (const auto &b : load_braid_fixture(o.fixture))
                bs.push_back({{"word", b.to_string()}, {"strands", b.strands()}});
        } else {
            for (const auto &w : o.braids) {
                json b = braid_input(w, o.n);
                bs.push_back({{"word", b["braid"]}, {"strands", b["strands"]}});
            }
        }
        if (bs.size() != 2)
            throw DomainError("compare-transverse needs exactly two braids");
        r.input = {{"braids", bs}, {"prime", o.prime}};
        r.mode = "hat";
        r.compute = cmd_compare_transverse;
    } else if (cmd == "examples") {
        r.input = {{"verify", o.verify}, {"name", o.name}};
        r.mode = o.verify ? "verify" : "list";
        r.compute = cmd_examples;
        r.cacheable = false;
    }
    return r;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Knot contact homology from braid words"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Options o;

    auto *dga = app.add_subcommand("dga", "print the knot DGA");
    add_braid(dga, o);
    add_dga_flags(dga, o);
    add_common(dga, o);

    auto *d2 = app.add_subcommand("d2-check", "verify that the differential squares to zero");
    add_braid(d2, o);
    add_dga_flags(d2, o);
    add_common(d2, o);

    for (const char *name : {"aug-count", "aug-enum"}) {
        auto *s = app.add_subcommand(name, std::string(name) == "aug-count"
                                               ? "count augmentations to F_p"
                                               : "list augmentations to F_p");
        add_braid(s, o);
        add_dga_flags(s, o);
        add_common(s, o);
        s->add_option("--prime", o.prime, "field size (default 3)");
        s->add_flag("--hat", o.hat, "use the hat DGA (transverse invariant)");
        if (std::string(name) == "aug-count")
            s->add_flag("--enumerate", o.enumerate, "also list the solutions");
    }

    auto *lh = app.add_subcommand("linhom", "linearized homology for one augmentation");
    add_braid(lh, o);
    add_dga_flags(lh, o);
    add_common(lh, o);
    lh->add_option("--aug", o.aug, "values, e.g. \"la=1,mu=-1,U=1,a12=-2,a21=-2\"")->required();
    lh->add_option("--coeff", o.coeff, "Z, Fp, Q or Laurent (Q[t^{±1}])");
    lh->add_option("--prime", o.prime, "field size for --coeff Fp");

    auto *ap = app.add_subcommand("augpoly", "augmentation polynomial");
    add_braid(ap, o);
    add_common(ap, o);
    ap->add_flag("--two-var", o.two_var, "set U = 1");
    ap->add_option("--method", o.method, "resultant or groebner");
    ap->add_option("--homfly-file", o.homfly_file, "file holding P(a, q) to check against");

    auto *hc = app.add_subcommand("homfly-check", "compare with a HOMFLY-PT polynomial");
    add_braid(hc, o);
    add_common(hc, o);
    hc->add_option("--method", o.method, "resultant or groebner");
    hc->add_option("--homfly-file", o.homfly_file, "file holding P(a, q)")->required();

    auto *ct = app.add_subcommand("compare-transverse", "compare two transverse knots");
    ct->add_option("--braid", o.braids, "a braid word; give exactly two");
    ct->add_option("--n", o.n, "number of strands for both braids");
    ct->add_option("--fixture", o.fixture, "JSON file with a braid pair");
    ct->add_option("--prime", o.prime, "field size (default 3)");
    add_common(ct, o);

    auto *ex = app.add_subcommand("examples", "list or verify the built-in examples");
    ex->add_flag("--verify", o.verify, "recompute every artifact");
    ex->add_option("--name", o.name, "only this entry");
    ex->add_flag("--json", o.json, "emit the JSON envelope");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return 1;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        Request req = make_request(cmd, o);
        json key_src = {{"command", cmd}, {"input", req.input}, {"version", kVersion}};
        ResultCache cache = ResultCache::from_env();
        std::string key = ResultCache::key(key_src);
        std::optional<json> env;
        bool use_cache = req.cacheable && !o.no_cache;
        if (use_cache) {
            env = cache.get(key);
            if (env && (!env->is_object() || (*env)["command"] != cmd ||
                        (*env)["input"] != req.input || !env->contains("result")))
                env.reset();
        }
        if (!env) {
            env = json{{"command", cmd},
                       {"input", req.input},
                       {"mode", req.mode},
                       {"result", req.compute(req.input)},
                       {"version", kVersion}};
            if (use_cache)
                cache.put(key, *env);
        }
        if (o.json)
            out << env->dump(2) << '\n';
        else
            render(out, (*env)["result"], 0);
        return result_failed(cmd, (*env)["result"]) ? 1 : 0;
    } catch (const ResourceLimit &e) {
        err << "kch: resource limit: " << e.what() << '\n';
        return 2;
    } catch (const DomainError &e) {
        err << "kch: " << e.what() << '\n';
        return 1;
    } catch (const json::exception &e) {
        err << "kch: malformed input: " << e.what() << '\n';
        return 1;
    } catch (const InternalError &e) {
        err << "kch: internal error: " << e.what() << '\n';
        return 3;
    }
}

int run(int argc, const char *const *argv) { return run(argc, argv, std::cout, std::cerr); }

} // namespace kch::cli
