#include "padic/document.hpp"

#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>

namespace padic {

using json = nlohmann::json;

namespace {

json cplx_json(const cplx& v) { return json::array({v.real(), v.imag()}); }

cplx cplx_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw DocumentError("bad complex value");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

json word_json(const Word& w) {
    json out = json::array();
    for (auto& [idx, d] : w.entries()) out.push_back(json::array({idx, d}));
    return out;
}

Word word_from(const json& j) {
    std::vector<std::pair<int, int>> entries;
    for (auto& e : j) entries.emplace_back(e[0].get<int>(), e[1].get<int>());
    return Word::of(std::move(entries));
}

json coset_json(const DualCoset& c) {
    return json{{"level", c.level}, {"word", word_json(c.rep)}};
}

DualCoset coset_from(const json& j) {
    return DualCoset{j.at("level").get<int>(), word_from(j.at("word"))};
}

json params_json(const GroupParams& p) { return json{{"p", p.p}, {"N", p.N}, {"M", p.M}}; }

GroupParams params_from(const json& j) {
    return GroupParams(j.at("p").get<int>(), j.at("N").get<int>(), j.at("M").get<int>());
}

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::General: return "general";
        case Branch::NOne: return "n1";
        case Branch::Orthogonal: return "orthogonal";
    }
    return "general";
}

Branch branch_from(const std::string& s) {
    if (s == "general") return Branch::General;
    if (s == "n1") return Branch::NOne;
    if (s == "orthogonal") return Branch::Orthogonal;
    throw DocumentError("unknown branch kind: " + s);
}

}  // namespace

std::string save_document(const FrameDocument& doc) {
    const FrameSystem& fs = doc.frame;
    json j;
    j["schema_version"] = "1";
    j["params"] = params_json(fs.params);

    json tree = json::array();
    tree.push_back(json::array({0, cplx_json(cplx(1.0))}));
    for (long m = 1; m < (long)fs.mask.zero.size(); ++m)
        if (fs.mask.zero[m]) tree.push_back(json::array({m, "0"}));
    j["tree"] = tree;

    json transforms = json::array();
    for (auto& [kind, arg] : doc.provenance.transforms)
        transforms.push_back(json{{"kind", kind == 'i' ? "i" : "ii"}, {"arg", arg}});
    j["transforms"] = transforms;
    j["padding"] = doc.provenance.padding;

    j["branch"] = json{{"kind", branch_name(fs.branch)},
                       {"n", fs.n_level},
                       {"j1", fs.j1},
                       {"j0", fs.j0},
                       {"j_low", fs.j_low}};

    json lambda = json::array(), beta = json::array();
    for (auto& v : fs.mask.lambda) lambda.push_back(cplx_json(v));
    for (auto& v : fs.mask.beta) beta.push_back(cplx_json(v));
    j["lambda"] = lambda;
    j["beta"] = beta;

    json wavelets = json::array();
    for (auto& w : fs.wavelets) {
        json mask_values = json::array();
        for (auto& [word, v] : w.mask.values())
            mask_values.push_back(json::array({word_json(word), cplx_json(v)}));
        wavelets.push_back(json{{"E", coset_json(w.support)},
                                {"t", w.t},
                                {"mask", json{{"level", w.mask.refinement_level()},
                                              {"values", mask_values}}}});
    }
    j["wavelets"] = wavelets;

    if (doc.verification_json)
        j["verification"] = json::parse(*doc.verification_json);
    else
        j["verification"] = nullptr;

    return j.dump(2) + "\n";
}

FrameDocument load_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DocumentError(std::string("JSON parse failure: ") + e.what());
    }
    try {
        if (j.at("schema_version").get<std::string>() != "1")
            throw DocumentError("unsupported schema_version");
        GroupParams params = params_from(j.at("params"));
        long count = 1;
        for (int i = 0; i < params.height(); ++i) count *= params.p;

        MaskSpec spec{params, {}, {}, {}, 0.0, 0.0, 0.0};
        spec.zero.assign(count, 0);
        for (auto& e : j.at("tree")) {
            long m = e.at(0).get<long>();
            if (m < 0 || m >= count) throw DocumentError("tree node out of range");
            if (e.at(1).is_string()) {
                auto s = e.at(1).get<std::string>();
                if (s == "0") {
                    if (m == 0) throw DocumentError("the root cannot be zero");
                    spec.zero[m] = 1;
                } else if (s != "free") {
                    throw DocumentError("bad tree node value: " + s);
                }
            }
        }
        auto lam = j.at("lambda");
        auto bet = j.at("beta");
        long bn = 1;
        for (int i = 0; i <= params.N; ++i) bn *= params.p;
        if ((long)lam.size() != count) throw DocumentError("lambda has the wrong length");
        if ((long)bet.size() != bn) throw DocumentError("beta has the wrong length");
        for (auto& v : lam) spec.lambda.push_back(cplx_from(v));
        for (auto& v : bet) spec.beta.push_back(cplx_from(v));
        double vmin = std::numeric_limits<double>::infinity();
        for (long m = 0; m < count; ++m) {
            double a = std::abs(spec.lambda[m]);
            spec.lambda_max = std::max(spec.lambda_max, a);
            if (!spec.zero[m]) vmin = std::min(vmin, a);
        }
        spec.lambda_min_nonzero = vmin;

        FrameSystem fs{params, spec,
                       phi_hat_nodes(spec), phi_hat_zero_flags(solved_tree(spec)),
                       {}, {},
                       assemble_phi_hat(spec), assemble_phi(spec),
                       0, branch_from(j.at("branch").at("kind").get<std::string>()),
                       false, {},
                       {}, {},
                       {}};
        fs.shifted_node = shift_tree(fs.phi_hat_node, params.p);
        fs.shifted_zero = shift_zero_flags(fs.phi_hat_zero, params.p);
        fs.n_level = j.at("branch").at("n").get<int>();
        fs.orthogonal = (fs.branch == Branch::Orthogonal);
        fs.j1 = j.at("branch").at("j1").get<std::vector<int>>();
        fs.j0 = j.at("branch").at("j0").get<std::vector<int>>();
        fs.j_low = j.at("branch").at("j_low").get<std::vector<int>>();

        for (auto& e : j.at("wavelets")) {
            DualCoset E = coset_from(e.at("E"));
            WaveletSpec w{E, e.at("t").get<int>(), StepFunctionFreq::indicator(params.p, E),
                          StepFunctionFreq(params.p, e.at("mask").at("level").get<int>()),
                          StepFunctionTime(params.p, 0)};
            for (auto& mv : e.at("mask").at("values"))
                w.mask.set(word_from(mv.at(0)), cplx_from(mv.at(1)));
            w.psi = inverse_fourier(w.psi_hat);
            fs.wavelets.push_back(std::move(w));
        }

        FrameDocument doc{std::move(fs), {}, std::nullopt};
        for (auto& t : j.at("transforms")) {
            auto kind = t.at("kind").get<std::string>();
            if (kind != "i" && kind != "ii") throw DocumentError("bad transform kind");
            doc.provenance.transforms.emplace_back(kind == "i" ? 'i' : 'l',
                                                   t.at("arg").get<long>());
        }
        doc.provenance.padding = j.at("padding").get<std::vector<long>>();
        if (!j.at("verification").is_null())
            doc.verification_json = j.at("verification").dump(2);
        return doc;
    } catch (const json::exception& e) {
        throw DocumentError(std::string("document structure: ") + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DocumentError("cannot open for writing: " + path);
    out << text;
    if (!out) throw DocumentError("write failure: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MaskTree load_tree_literal(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DocumentError(std::string("tree literal parse failure: ") + e.what());
    }
    try {
        GroupParams params = params_from(j.at("params"));
        MaskTree t(params);
        for (auto& e : j.at("nodes")) {
            long m = e.at(0).get<long>();
            if (m < 0 || m >= t.node_count()) throw DocumentError("tree node out of range");
            const auto& v = e.at(1);
            if (v.is_string()) {
                auto s = v.get<std::string>();
                if (s == "0" || s == "zero") {
                    if (m == 0) throw DocumentError("the root cannot be zero");
                    t.set_zero(m);
                } else if (s != "free") {
                    throw DocumentError("bad tree node value: " + s);
                }
            } else {
                cplx z = cplx_from(v);
                if (m == 0) {
                    if (std::abs(z - cplx(1.0)) > 1e-12)
                        throw DocumentError("the root value must be 1");
                } else if (z == cplx(0.0)) {
                    t.set_zero(m);
                } else {
                    t.set_value(m, z);
                }
            }
        }
        return t;
    } catch (const json::exception& e) {
        throw DocumentError(std::string("tree literal structure: ") + e.what());
    }
}

std::string save_tree_literal(const MaskTree& t) {
    json nodes = json::array();
    nodes.push_back(json::array({0, cplx_json(cplx(1.0))}));
    for (long m = 1; m < t.node_count(); ++m) {
        if (t.state(m) == NodeState::Zero)
            nodes.push_back(json::array({m, "0"}));
        else if (t.state(m) == NodeState::Value)
            nodes.push_back(json::array({m, cplx_json(t.value(m))}));
    }
    json j{{"params", params_json(t.params())}, {"nodes", nodes}};
    return j.dump(2) + "\n";
}

}  // namespace padic
