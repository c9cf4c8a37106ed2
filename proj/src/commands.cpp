#include "padic/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include "padic/frame_verify.hpp"
#include "padic/render.hpp"

namespace padic {

using json = nlohmann::json;

namespace {

std::pair<char, long> parse_transform(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("transform must be i:J or ii:L");
    std::string kind = s.substr(0, colon);
    long arg = std::stol(s.substr(colon + 1));
    if (kind == "i") return {'i', arg};
    if (kind == "ii") return {'l', arg};
    throw std::invalid_argument("unknown transform kind: " + kind);
}

/// "level:j^e,j^e" with an optional empty exponent list is rejected.
DualCoset parse_coset(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("coset must be level:j^e,...");
    int level = std::stoi(s.substr(0, colon));
    std::vector<std::pair<int, int>> entries;
    std::string rest = s.substr(colon + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
        size_t comma = rest.find(',', pos);
        std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto caret = item.find('^');
        if (caret == std::string::npos) throw std::invalid_argument("coset entry must be j^e");
        entries.emplace_back(std::stoi(item.substr(0, caret)), std::stoi(item.substr(caret + 1)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return DualCoset{level, Word::of(std::move(entries))};
}

}  // namespace

std::string verification_report(const FrameSystem& fs, int tests, double tol, std::uint64_t seed,
                                bool& pass) {
    const GroupParams& params = fs.params;
    json rep;
    rep["params"] = json{{"p", params.p}, {"N", params.N}, {"M", params.M}};
    rep["tests"] = tests;
    rep["seed"] = seed;
    rep["tol"] = tol;

    double worst = 0.0;

    // Mask consistency: every row of the linear system must match lambda.
    double row_residual = 0.0;
    for (long m = 0; m < (long)fs.mask.lambda.size(); ++m) {
        cplx q = q_node(params, m), acc(0.0);
        for (auto it = fs.mask.beta.rbegin(); it != fs.mask.beta.rend(); ++it) acc = acc * q + *it;
        row_residual = std::max(row_residual, std::abs(acc - fs.mask.lambda[m]));
    }
    rep["mask_consistency"] = row_residual;
    worst = std::max(worst, row_residual);

    rep["lambda_min_abs"] = fs.mask.lambda_min_nonzero;
    rep["lambda_max_abs"] = fs.mask.lambda_max;

    // Theorem 3.1 hypotheses (structural tiling plus mask values).
    auto t31 = check_theorem31(fs);
    rep["theorem31"] = json{{"pass", t31.pass},
                            {"max_mask_deviation", t31.max_mask_deviation},
                            {"failures", t31.failures}};
    worst = std::max(worst, t31.max_mask_deviation);
    bool structural_ok = t31.pass;

    // Refinement equation.
    double refine_res = refinement_residual(fs.mask, fs.phi);
    rep["refinement_residual"] = refine_res;
    worst = std::max(worst, refine_res);

    // Parseval on random test functions (skipped for the degenerate branch,
    // which emits no wavelets).
    json parseval = json::array();
    double max_parseval = 0.0;
    if (!fs.orthogonal) {
        for (int i = 0; i < tests; ++i) {
            auto f = random_test_function(params, seed + i);
            auto r = parseval_residual(f, fs);
            if (!r.tiling_ok) structural_ok = false;
            max_parseval = std::max(max_parseval, r.residual);
            parseval.push_back(json{{"seed", seed + i},
                                    {"norm_sq", r.norm_sq},
                                    {"total", r.total},
                                    {"tail", r.tail},
                                    {"residual", r.residual},
                                    {"tiling_ok", r.tiling_ok},
                                    {"truncation_low", r.truncation_low},
                                    {"truncation_high", r.truncation_high}});
        }
    }
    rep["parseval"] = parseval;
    rep["max_parseval_residual"] = max_parseval;
    worst = std::max(worst, max_parseval);

    // Lemma 3.1 spot checks on a small grid.
    json lemma = json::array();
    if (!fs.orthogonal) {
        for (int i = 0; i < std::min(tests, 2); ++i) {
            auto f = random_test_function(params, seed + 1000 + i);
            auto fhat = fourier(f, false);
            for (size_t wj = 0; wj < fs.wavelets.size(); ++wj) {
                for (int n : {-1, 0, 1}) {
                    auto r = lemma31_check(f, fhat, fs.wavelets[wj], n);
                    lemma.push_back(json{{"wavelet", wj},
                                         {"n", n},
                                         {"residual", r.residual},
                                         {"extra_layer_max", r.extra_layer_max}});
                    worst = std::max(worst, r.residual);
                }
            }
        }
    }
    rep["lemma31"] = lemma;

    pass = structural_ok && worst <= tol;
    rep["max_residual"] = worst;
    rep["pass"] = pass;
    return rep.dump(2) + "\n";
}

int cmd_build(const BuildArgs& args, std::string& err) {
    try {
        MaskTree tree = [&] {
            if (args.tree_file) return load_tree_literal(read_file(*args.tree_file));
            return initial_tree(GroupParams(args.p, args.N, args.N));
        }();

        Provenance prov;
        for (auto& spec : args.transforms) {
            auto [kind, arg] = parse_transform(spec);
            tree = (kind == 'i') ? transform_i(tree, arg) : transform_ii(tree, arg);
            prov.transforms.emplace_back(kind, arg);
        }

        auto cls = classify(tree);
        if (cls.kind == TreeClass::Infeasible) {
            err = "infeasible tree: #Lambda_0 >= p^{N+1} does not define a mask (Theorem 2.01 case 3)";
            return kExitInfeasible;
        }
        if (!args.pad.empty()) {
            tree = pad_with(tree, args.pad);
            prov.padding = args.pad;
        } else if (cls.kind == TreeClass::DeterminesAfterPadding) {
            auto before = tree.zero_set();
            tree = pad_default(tree);
            for (long m : tree.zero_set())
                if (std::find(before.begin(), before.end(), m) == before.end())
                    prov.padding.push_back(m);
        }
        if (classify(tree).kind != TreeClass::Determines) {
            err = "tree does not determine a mask after padding";
            return kExitInfeasible;
        }

        auto spec = solve_mask(tree);
        // Pinned values in an input tree must agree with the solved mask.
        if (args.tree_file) {
            for (long m = 1; m < tree.node_count(); ++m) {
                if (tree.state(m) == NodeState::Value &&
                    std::abs(tree.value(m) - spec.lambda[m]) > 1e-8) {
                    err = "input tree pins node " + std::to_string(m) +
                          " to a value inconsistent with the solved mask";
                    return kExitBadInput;
                }
            }
        }

        BuildOptions opts;
        opts.j_low = args.j_low;
        for (auto& c : args.e_cosets) opts.custom_cosets.push_back(parse_coset(c));
        FrameSystem fs = build_frame(spec, opts);

        auto check = check_theorem31(fs);
        if (!check.pass) {
            err = "Theorem 3.1 check failed:";
            for (auto& f : check.failures) err += "\n  " + f;
            return kExitVerifyFail;
        }

        FrameDocument doc{std::move(fs), std::move(prov), std::nullopt};
        write_file(args.out, save_document(doc));
        return kExitOk;
    } catch (const TransformError& e) {
        err = e.what();
        return kExitBadInput;
    } catch (const InvalidTreeError& e) {
        err = e.what();
        return kExitBadInput;
    } catch (const InfeasibleError& e) {
        err = e.what();
        return kExitInfeasible;
    } catch (const DocumentError& e) {
        err = e.what();
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err = e.what();
        return kExitBadInput;
    }
}

int cmd_verify(const VerifyArgs& args, std::string& err) {
    FrameDocument doc{FrameSystem{GroupParams(2, 1, 1), MaskSpec{GroupParams(2, 1, 1), {}, {}, {}, 0, 0, 0},
                                  {}, {}, {}, {}, StepFunctionFreq(2, 0), StepFunctionTime(2, 0),
                                  0, Branch::General, false, {}, {}, {}, {}},
                      {}, std::nullopt};
    try {
        doc = load_document(read_file(args.in));
    } catch (const DocumentError& e) {
        err = e.what();
        return kExitIo;
    }
    bool pass = false;
    std::string report = verification_report(doc.frame, args.tests, args.tol, args.seed, pass);
    if (args.report_out) {
        try {
            write_file(*args.report_out, report);
        } catch (const DocumentError& e) {
            err = e.what();
            return kExitIo;
        }
    } else {
        std::cout << report;
    }
    if (!pass) err = "verification failed; see report";
    return pass ? kExitOk : kExitVerifyFail;
}

int cmd_render(const RenderArgs& args, std::string& err) {
    try {
        auto doc = load_document(read_file(args.in));
        RenderWhat what;
        if (args.what == "phi-hat")
            what = RenderWhat::PhiHat;
        else if (args.what == "phi-hat-shifted")
            what = RenderWhat::PhiHatShifted;
        else if (args.what == "wavelets")
            what = RenderWhat::Wavelets;
        else {
            err = "unknown --what: " + args.what;
            return kExitBadInput;
        }
        RenderFormat fmt;
        if (args.format == "ascii")
            fmt = RenderFormat::Ascii;
        else if (args.format == "svg")
            fmt = RenderFormat::Svg;
        else {
            err = "unknown --format: " + args.format;
            return kExitBadInput;
        }
        std::string out = render(doc.frame, what, fmt);
        if (args.out)
            write_file(*args.out, out);
        else
            std::cout << out;
        return kExitOk;
    } catch (const DocumentError& e) {
        err = e.what();
        return kExitIo;
    }
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"step refinable functions and tight wavelet frames on the p-adic group"};
    app.require_subcommand(1);

    BuildArgs build;
    auto* b = app.add_subcommand("build", "construct a frame from parameters or a tree file");
    b->add_option("--p", build.p, "prime p");
    b->add_option("--N", build.N, "support level N (M = N)");
    b->add_option("--tree", build.tree_file, "tree literal JSON file (overrides --p/--N)");
    b->add_option("--transform", build.transforms, "elementary transformation i:J or ii:L")
        ->allow_extra_args(false);
    b->add_option("--pad", build.pad, "explicit padding node indices");
    b->add_option("--j-low", build.j_low, "n=1 branch: J_1 members moved to J_{1,-N}");
    b->add_option("--e-coset", build.e_cosets, "general branch: custom coset level:j^e,j^e");
    b->add_option("--out", build.out, "output FrameDocument path")->required();

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "run the brute-force tight-frame verification");
    v->add_option("--in", verify.in, "FrameDocument path")->required();
    v->add_option("--tests", verify.tests, "number of random test functions (default 50)");
    v->add_option("--tol", verify.tol, "residual tolerance (default 1e-9)");
    v->add_option("--seed", verify.seed, "random seed (default 0)");
    v->add_option("--report", verify.report_out, "write the report here instead of stdout");

    RenderArgs rnd;
    auto* r = app.add_subcommand("render", "Monna-line rendering");
    r->add_option("--in", rnd.in, "FrameDocument path")->required();
    r->add_option("--what", rnd.what, "phi-hat | phi-hat-shifted | wavelets");
    r->add_option("--format", rnd.format, "ascii | svg");
    r->add_option("--out", rnd.out, "output path (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    if (const char* env = std::getenv("PADIC_FRAMES_SEED")) verify.seed = std::strtoull(env, nullptr, 10);

    std::string err;
    int code = kExitBadInput;
    if (b->parsed()) {
        if (!build.tree_file && (build.p == 0 || build.N == 0)) {
            std::cerr << "build: --p and --N are required without --tree\n";
            return kExitBadInput;
        }
        code = cmd_build(build, err);
    } else if (v->parsed()) {
        code = cmd_verify(verify, err);
    } else if (r->parsed()) {
        code = cmd_render(rnd, err);
    }
    if (!err.empty()) std::cerr << err << "\n";
    return code;
}

}  // namespace padic
