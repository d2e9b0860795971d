// gcdegen: command-line front end for the gcdegen library.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or bounds error.
// Data goes to stdout, progress to stderr.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcdegen/gcdegen.hpp"
#include "gcdegen/json_io.hpp"

namespace {

using namespace gcdegen;
using ojson = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string format = "json";
    int jobs = 1;
    unsigned seed = 1;
    bool force = false;
    long long pattern_limit = kDefaultPatternLimit;
};

// A command's output: summary fields plus a flat list of records.
struct Report {
    ojson doc = ojson::object();
    bool passed = true;
    std::string counterexample;
};

ojson ordered(const nlohmann::json& j) { return ojson::parse(j.dump()); }

std::string csv_cell(const ojson& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void print(const Report& rep, const Options& opt) {
    const ojson& doc = rep.doc;
    if (opt.format == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    const ojson records = doc.contains("records") ? doc.at("records") : ojson::array();
    if (opt.format == "csv") {
        if (records.empty()) return;
        std::vector<std::string> keys;
        for (const auto& [k, v] : records.front().items()) keys.push_back(k);
        for (std::size_t t = 0; t < keys.size(); ++t) std::cout << (t ? "," : "") << keys[t];
        std::cout << "\n";
        for (const auto& r : records) {
            for (std::size_t t = 0; t < keys.size(); ++t)
                std::cout << (t ? "," : "") << (r.contains(keys[t]) ? csv_cell(r.at(keys[t])) : std::string());
            std::cout << "\n";
        }
        return;
    }
    for (const auto& [k, v] : doc.items()) {
        if (k == "records") continue;
        std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    for (const auto& r : records) {
        std::cout << " ";
        for (const auto& [k, v] : r.items()) std::cout << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
        std::cout << "\n";
    }
}

void set_records(Report& rep, ojson records) {
    rep.doc["count"] = records.size();
    rep.doc["records"] = std::move(records);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw BoundExceeded(what);
}

// Default cap, raised to the hard cap by --force.
void check_n(int n, int soft, int hard, const Options& opt, const std::string& what) {
    if (n < 1) throw DomainError(what + ": n must be positive");
    require(n <= hard, what + " never runs above n = " + std::to_string(hard));
    require(opt.force || n <= soft, what + " limited to n <= " + std::to_string(soft) + " without --force");
}

int ideal_bound(const Options& opt) { return opt.force ? kDefaultIdealBound : kDefaultDegenerationBound; }

Report from_check(const CheckResult& r, const std::string& command) {
    std::cerr << "[" << command << "] " << r.id << " " << (r.passed ? "pass" : "FAIL") << " in " << r.millis << " ms\n";
    Report rep;
    rep.passed = r.passed;
    rep.counterexample = r.counterexample;
    rep.doc["command"] = command;
    rep.doc["passed"] = r.passed;
    ojson rec = {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                 {"counterexample", r.counterexample}};
    set_records(rep, ojson::array({rec}));
    return rep;
}

ojson cells_json(const std::vector<Cell>& cells) { return ordered(json_io::cells_to_json(cells)); }

// ---- data commands

Report cmd_pipedreams(const std::string& word, const Options& opt) {
    const auto w = Permutation::parse(word);
    check_n(w.n(), kDefaultPipeDreamBound, 9, opt, "pipe dream enumeration");
    const auto dreams = enumerate_pipe_dreams(w, std::max(w.n(), kDefaultPipeDreamBound));
    Report rep;
    rep.doc["command"] = "pipedreams";
    rep.doc["w"] = w.to_string();
    rep.doc["length"] = length(w);
    ojson recs = ojson::array();
    for (std::size_t t = 0; t < dreams.size(); ++t)
        recs.push_back({{"index", t}, {"cells", cells_json(dreams[t].cells())}});
    set_records(rep, std::move(recs));
    return rep;
}

Report cmd_schubert(const std::string& word, const std::string& method, const Options& opt) {
    const auto w = Permutation::parse(word);
    check_n(w.n(), kDefaultPipeDreamBound, 9, opt, "Schubert polynomial");
    const auto poly = method == "dd" ? schubert_divided_difference(w)
                                     : schubert_pipedreams(w, std::max(w.n(), kDefaultPipeDreamBound));
    Report rep;
    rep.doc["command"] = "schubert";
    rep.doc["w"] = w.to_string();
    rep.doc["method"] = method;
    rep.doc["polynomial"] = poly.to_string();
    ojson recs = ojson::array();
    for (const auto& [e, c] : poly.terms()) {
        std::string exps;
        for (std::size_t t = 0; t < e.size(); ++t) exps += (t ? " " : "") + std::to_string(e[t]);
        recs.push_back({{"exponents", exps}, {"coeff", c.str()}});
    }
    set_records(rep, std::move(recs));
    return rep;
}

std::string rows_string(const std::vector<std::vector<long long>>& rows) {
    std::string s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) s += "|";
        for (std::size_t c = 0; c < rows[r].size(); ++c) s += (c ? " " : "") + std::to_string(rows[r][c]);
    }
    return s;
}

Report cmd_gc_enumerate(const HighestWeight& lambda, const Options& opt) {
    const auto patterns = enumerate_patterns(lambda, opt.pattern_limit);
    Report rep;
    rep.doc["command"] = "gc enumerate";
    rep.doc["lambda"] = lambda.to_string();
    ojson recs = ojson::array();
    for (std::size_t t = 0; t < patterns.size(); ++t)
        recs.push_back({{"index", t}, {"rows", rows_string(patterns[t].rows())}});
    set_records(rep, std::move(recs));
    return rep;
}

Report cmd_gc_hrep(const HighestWeight& lambda) {
    const auto h = h_representation(lambda);
    Report rep;
    rep.doc["command"] = "gc hrep";
    rep.doc["lambda"] = lambda.to_string();
    rep.doc["variables"] = cells_json(h.variables);
    ojson recs = ojson::array();
    for (std::size_t r = 0; r < h.a.size(); ++r) {
        std::string row;
        for (std::size_t v = 0; v < h.a[r].size(); ++v) row += (v ? " " : "") + std::to_string(h.a[r][v]);
        recs.push_back({{"row", r}, {"A", row}, {"b", h.b[r]}});
    }
    set_records(rep, std::move(recs));
    return rep;
}

Report cmd_gc_face(const std::string& word, const HighestWeight& lambda, const Options& opt) {
    const auto w = Permutation::parse(word);
    if (w.n() != lambda.n()) throw DomainError("w and lambda must have the same n");
    check_n(w.n(), 5, 6, opt, "face computation");
    Report rep;
    rep.doc["command"] = "gc face";
    rep.doc["w"] = w.to_string();
    rep.doc["lambda"] = lambda.to_string();
    ojson recs = ojson::array();
    for (const auto& r : enumerate_pipe_dreams(w)) {
        const auto f = face_from_pipe_dream(r, lambda);
        recs.push_back({{"cells", cells_json(r.cells())},
                        {"lattice_points", face_lattice_points(f, opt.pattern_limit).size()},
                        {"dimension", face_dimension(f, opt.pattern_limit)}});
    }
    rep.doc["union_lattice_points"] = union_face_count(w, lambda, FaceConvention::RowAdjacent, opt.pattern_limit).str();
    rep.doc["demazure_permutation"] = orient(w, kFaceOrientation).to_string();
    rep.doc["demazure_dim"] = demazure_dim(orient(w, kFaceOrientation), lambda).str();
    set_records(rep, std::move(recs));
    return rep;
}

Report cmd_upsilon(const HighestWeight& lambda, const Options& opt) {
    const auto set = upsilon(lambda, opt.pattern_limit);
    Report rep;
    rep.doc["command"] = "upsilon";
    rep.doc["lambda"] = lambda.to_string();
    ojson recs = ojson::array();
    for (const auto& e : set) recs.push_back({{"entries", ordered(json_io::to_json(e)).at("entries")}});
    set_records(rep, std::move(recs));
    return rep;
}

// ---- verification commands

Report cmd_verify_initial(int n, const std::string& word, int sample, const Options& opt) {
    std::vector<Permutation> perms;
    if (!word.empty()) {
        perms.push_back(Permutation::parse(word));
    } else {
        if (n < 1) throw DomainError("give --n or --w");
        perms = all_permutations(std::min(n, kDefaultIdealBound + 1));
    }
    const int size = perms.front().n();
    check_n(size, kDefaultDegenerationBound, kDefaultIdealBound, opt, "initial ideal check");
    if (sample > 0 && static_cast<std::size_t>(sample) < perms.size()) {
        std::mt19937 rng(opt.seed);
        std::shuffle(perms.begin(), perms.end(), rng);
        perms.resize(static_cast<std::size_t>(sample));
        std::sort(perms.begin(), perms.end());
    }
    std::cerr << "[verify initial-ideal] " << perms.size() << " permutations, " << opt.jobs << " jobs\n";
    const int bound = ideal_bound(opt);
    const auto reports = parallel_map(perms, opt.jobs, [bound](const Permutation& w) { return verify_degeneration(w, bound); });
    Report rep;
    rep.doc["command"] = "verify initial-ideal";
    ojson recs = ojson::array();
    for (const auto& r : reports) {
        ojson j = {{"w", r.w.to_string()},
                   {"equal", r.equal},
                   {"pipe_dream_count", r.pipe_dream_count},
                   {"initial_generators", ordered(json_io::to_json(r.initial))},
                   {"intersection_generators", ordered(json_io::to_json(r.intersection))}};
        if (!r.equal && rep.passed) {
            rep.passed = false;
            rep.counterexample = "w=" + r.w.to_string();
        }
        recs.push_back(std::move(j));
    }
    rep.doc["passed"] = rep.passed;
    set_records(rep, std::move(recs));
    return rep;
}

Report cmd_verify_faces(int n, const std::string& lambda_text, const Options& opt) {
    check_n(n, 5, 6, opt, "face check");
    const auto lambda = lambda_text.empty() ? HighestWeight::staircase(n) : HighestWeight::parse(lambda_text);
    if (lambda.n() != n) throw DomainError("lambda must have n parts");
    std::vector<Permutation> perms = all_permutations(n);
    const auto limit = opt.pattern_limit;
    const auto counts = parallel_map(perms, opt.jobs, [&](const Permutation& w) {
        return std::pair{union_face_count(w, lambda, FaceConvention::RowAdjacent, limit),
                         demazure_dim(orient(w, kFaceOrientation), lambda)};
    });
    Report rep;
    rep.doc["command"] = "verify faces";
    rep.doc["lambda"] = lambda.to_string();
    rep.doc["orientation"] = to_string(kFaceOrientation);
    ojson recs = ojson::array();
    for (std::size_t t = 0; t < perms.size(); ++t) {
        const bool ok = counts[t].first == counts[t].second;
        if (!ok && rep.passed) {
            rep.passed = false;
            rep.counterexample = "w=" + perms[t].to_string();
        }
        recs.push_back({{"w", perms[t].to_string()},
                        {"union_lattice_points", counts[t].first.str()},
                        {"demazure_dim", counts[t].second.str()},
                        {"equal", ok}});
    }
    rep.doc["passed"] = rep.passed;
    set_records(rep, std::move(recs));
    return rep;
}

Report cmd_verify_all(int n, const Options& opt) {
    std::vector<CheckResult> results;
    auto log = [](const CheckResult& r) {
        std::cerr << "[verify all] " << r.id << " " << (r.passed ? "pass" : "FAIL") << " in " << r.millis << " ms\n";
    };
    if (n <= 0) {
        results = acceptance_suite(opt.jobs, log);
    } else {
        check_n(n, 6, 8, opt, "verify all");
        const int ideal_n = std::min(n, ideal_bound(opt));
        std::vector<int> ns;
        for (int k = 1; k <= ideal_n; ++k) ns.push_back(k);
        std::vector<std::function<CheckResult()>> checks = {
            [&] { return check_initial_ideal(ns, opt.jobs, ideal_bound(opt)); },
            [&] { return check_schubert(std::min(n, 6), opt.jobs); },
            [&] { return check_dims(std::min(n, 5), 2, n <= 4); },
            [&] { return check_gc_polytope(std::min(n, 4), 2); },
            [&] { return check_lemma_weights(n); },
            [&] { return check_sagbi_relations(std::min(n, 5), n); },
            [&] { return check_krull(n); },
            [&] { return check_conjugation(n); },
            [&] { return check_rc_faces(std::clamp(n, 3, 4)); },
            [&] { return check_characters(character_weights()); },
        };
        for (const auto& c : checks) {
            results.push_back(c());
            log(results.back());
        }
    }
    Report rep;
    rep.doc["command"] = "verify all";
    ojson recs = ojson::array();
    for (const auto& r : results) {
        if (!r.passed && rep.passed) {
            rep.passed = false;
            rep.counterexample = r.id + ": " + r.counterexample;
        }
        recs.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                        {"counterexample", r.counterexample}});
    }
    rep.doc["passed"] = rep.passed;
    set_records(rep, std::move(recs));
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pipe dreams, Gelfand-Tsetlin polytopes and Schubert degenerations"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
    app.add_option("--seed", opt.seed, "Seed for sampled sweeps")->capture_default_str();
    app.add_flag("--force", opt.force, "Raise size limits to their hard caps");
    app.add_option("--max-enum", opt.pattern_limit, "Enumeration limit for patterns and Upsilon")
        ->envname("GCDEGEN_MAX_ENUM")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::function<Report()> run;

    auto* pd = app.add_subcommand("pipedreams", "List the reduced pipe dreams of a permutation");
    std::string pd_w;
    pd->add_option("w", pd_w, "Permutation, e.g. 21534")->required();
    pd->callback([&] { run = [&] { return cmd_pipedreams(pd_w, opt); }; });

    auto* sch = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
    std::string sch_w, method = "pipedream";
    sch->add_option("w", sch_w, "Permutation")->required();
    sch->add_option("--method", method, "pipedream or dd")
        ->check(CLI::IsMember({"pipedream", "dd"}))
        ->capture_default_str();
    sch->callback([&] { run = [&] { return cmd_schubert(sch_w, method, opt); }; });

    auto* gc = app.add_subcommand("gc", "Gelfand-Tsetlin patterns and faces");
    gc->require_subcommand(1);
    gc->fallthrough();
    std::string lambda_text, face_w;
    auto* gce = gc->add_subcommand("enumerate", "All integer GC patterns for lambda");
    gce->add_option("--lambda", lambda_text, "Highest weight, e.g. 2,1,0")->required();
    gce->callback([&] { run = [&] { return cmd_gc_enumerate(HighestWeight::parse(lambda_text), opt); }; });
    auto* gch = gc->add_subcommand("hrep", "Inequality description A x <= b");
    gch->add_option("--lambda", lambda_text, "Highest weight")->required();
    gch->callback([&] { run = [&] { return cmd_gc_hrep(HighestWeight::parse(lambda_text)); }; });
    auto* gcf = gc->add_subcommand("face", "Faces of the pipe dreams of w");
    gcf->add_option("--w", face_w, "Permutation")->required();
    gcf->add_option("--lambda", lambda_text, "Highest weight")->required();
    gcf->callback([&] { run = [&] { return cmd_gc_face(face_w, HighestWeight::parse(lambda_text), opt); }; });

    auto* ups = app.add_subcommand("upsilon", "Exponent vectors in Upsilon_lambda");
    ups->add_option("--lambda", lambda_text, "Highest weight")->required();
    ups->callback([&] { run = [&] { return cmd_upsilon(HighestWeight::parse(lambda_text), opt); }; });

    auto* ver = app.add_subcommand("verify", "Exhaustive checks; exit 1 on a counterexample");
    ver->require_subcommand(1);
    ver->fallthrough();
    int n = 0, max_part = 2, sample = 0;
    std::string verify_w;

    auto* vi = ver->add_subcommand("initial-ideal", "in(I_w) equals the intersection of pipe-dream primes");
    auto* vi_n = vi->add_option("--n", n, "Check all of S_n");
    vi->add_option("--w", verify_w, "Check one permutation")->excludes(vi_n);
    vi->add_option("--sample", sample, "Check a seeded random sample of S_n")->check(CLI::PositiveNumber);
    vi->callback([&] { run = [&] { return cmd_verify_initial(n, verify_w, sample, opt); }; });

    auto* vl = ver->add_subcommand("lemma-weights", "Antidiagonal terms carry the minimal weight");
    vl->add_option("--n", n)->required();
    vl->callback([&] {
        run = [&] {
            check_n(n, 6, 8, opt, "lemma-weights");
            return from_check(check_lemma_weights(n), "verify lemma-weights");
        };
    });

    auto* vs = ver->add_subcommand("sagbi-relations", "Lattice laws and degenerate binomial relations");
    vs->add_option("--n", n)->required();
    vs->callback([&] {
        run = [&] {
            check_n(n, 6, 8, opt, "sagbi-relations");
            return from_check(check_sagbi_relations(n, n), "verify sagbi-relations");
        };
    });

    auto* vd = ver->add_subcommand("dims", "Pattern counts, Upsilon sizes and Weyl dimensions");
    vd->add_option("--n", n)->required();
    vd->add_option("--max-part", max_part)->capture_default_str();
    vd->callback([&] {
        run = [&] {
            check_n(n, 5, 7, opt, "dims");
            if (max_part < 0) throw DomainError("--max-part must be nonnegative");
            return from_check(check_dims(n, max_part, n <= 4), "verify dims");
        };
    });

    auto* vf = ver->add_subcommand("faces", "Union of rc-faces counts Demazure dimensions");
    vf->add_option("--n", n)->required();
    vf->add_option("--lambda", lambda_text, "Highest weight (default staircase)");
    vf->callback([&] { run = [&] { return cmd_verify_faces(n, lambda_text, opt); }; });

    auto* vc = ver->add_subcommand("conjugation", "Conjugation exponents are nonnegative");
    vc->add_option("--n", n)->required();
    vc->callback([&] {
        run = [&] {
            check_n(n, 12, 40, opt, "conjugation");
            return from_check(check_conjugation(n), "verify conjugation");
        };
    });

    auto* va = ver->add_subcommand("all", "Every check (acceptance ranges unless --n is given)");
    va->add_option("--n", n, "Scale every check to n");
    va->callback([&] { run = [&] { return cmd_verify_all(n, opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Report rep = run();
        print(rep, opt);
        if (!rep.passed) {
            std::cerr << "counterexample: " << rep.counterexample << "\n";
            return kExitFailure;
        }
        return EXIT_SUCCESS;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
