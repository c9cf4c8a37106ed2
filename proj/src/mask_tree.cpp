#include "padic/mask_tree.hpp"

#include <algorithm>

namespace padic {

namespace {

long ipow(int p, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

}  // namespace

MaskTree::MaskTree(const GroupParams& params) : params_(params) {
    long n = ipow(params_.p, params_.height());
    states_.assign(n, NodeState::Free);
    values_.assign(n, cplx(0.0));
    states_[0] = NodeState::Value;
    values_[0] = cplx(1.0);
}

cplx MaskTree::value(long m) const {
    if (states_.at(m) == NodeState::Zero) return cplx(0.0);
    if (states_.at(m) == NodeState::Free)
        throw std::logic_error("MaskTree: node " + std::to_string(m) + " is unsolved");
    return values_[m];
}

void MaskTree::set_zero(long m) {
    if (m == 0) throw TransformError("MaskTree: the root is fixed to 1", 0);
    states_.at(m) = NodeState::Zero;
}

void MaskTree::set_free(long m) {
    if (m == 0) throw TransformError("MaskTree: the root is fixed to 1", 0);
    states_.at(m) = NodeState::Free;
}

void MaskTree::set_value(long m, cplx v) {
    states_.at(m) = NodeState::Value;
    values_.at(m) = v;
}

int MaskTree::level_of(long m) const {
    int s = 0;
    while (m > 0) {
        m /= params_.p;
        ++s;
    }
    return s;
}

std::vector<long> MaskTree::zero_set() const {
    std::vector<long> out;
    for (long m = 0; m < node_count(); ++m)
        if (states_[m] == NodeState::Zero) out.push_back(m);
    return out;
}

long MaskTree::zero_count() const {
    long c = 0;
    for (auto s : states_)
        if (s == NodeState::Zero) ++c;
    return c;
}

long MaskTree::first_uncovered_leaf() const {
    for (long m = first_leaf(); m < node_count(); ++m) {
        bool covered = false;
        for (long a = m; a > 0; a /= params_.p) {
            if (states_[a] == NodeState::Zero) {
                covered = true;
                break;
            }
        }
        if (!covered) return m;
    }
    return -1;
}

bool MaskTree::every_path_has_zero() const { return first_uncovered_leaf() == -1; }

bool MaskTree::solved() const {
    for (auto s : states_)
        if (s == NodeState::Free) return false;
    return true;
}

MaskTree initial_tree(const GroupParams& params) {
    if (params.M != params.N)
        throw std::invalid_argument("initial_tree: the algorithm requires M == N");
    MaskTree t(params);
    int p = params.p;
    int N = params.N;
    long pN = ipow(p, N);
    long pN1 = ipow(p, N + 1);
    long leaf_end = ipow(p, 2 * N + 1);
    for (long m = pN; m <= pN1 - 2; ++m) t.set_zero(m);
    for (long m = leaf_end - pN; m <= leaf_end - 1; ++m) t.set_zero(m);
    return t;
}

MaskTree transform_i(const MaskTree& t, long j) {
    int p = t.params().p;
    long parent = ipow(p, t.params().N - 1) + j;
    long child0 = parent * p;
    if (j < 0 || child0 + p - 1 >= t.node_count())
        throw TransformError("transform_i: index out of range", parent);
    if (t.state(parent) == NodeState::Zero)
        throw TransformError("transform_i: node is already zero", parent);
    for (int k = 0; k < p; ++k)
        if (t.state(child0 + k) != NodeState::Zero)
            throw TransformError("transform_i: child is not zero", child0 + k);
    MaskTree out = t;
    out.set_zero(parent);
    for (int k = 0; k < p; ++k) out.set_free(child0 + k);
    return out;
}

MaskTree transform_ii(const MaskTree& t, long l) {
    int p = t.params().p;
    long node = ipow(p, t.params().N) + l;
    long child0 = node * p;
    if (l < 0 || child0 + p - 1 >= t.node_count())
        throw TransformError("transform_ii: index out of range", node);
    if (t.state(node) != NodeState::Zero)
        throw TransformError("transform_ii: node is not zero", node);
    for (int k = 0; k < p; ++k)
        if (t.state(child0 + k) == NodeState::Zero)
            throw TransformError("transform_ii: child is already zero", child0 + k);
    MaskTree out = t;
    out.set_free(node);
    for (int k = 0; k < p; ++k) out.set_zero(child0 + k);
    return out;
}

ClassifyResult classify(const MaskTree& t) {
    long witness = t.first_uncovered_leaf();
    if (witness != -1)
        throw InvalidTreeError(
            "tree has a zero-free path: phi_hat would not vanish on the coset of leaf " +
                std::to_string(witness),
            witness);
    long target = ipow(t.params().p, t.params().N + 1) - 1;
    long count = t.zero_count();
    if (count == target) return {TreeClass::Determines, 0};
    if (count < target) return {TreeClass::DeterminesAfterPadding, target - count};
    return {TreeClass::Infeasible, 0};
}

MaskTree pad_default(const MaskTree& t) {
    auto cls = classify(t);
    if (cls.kind == TreeClass::Determines) return t;
    if (cls.kind == TreeClass::Infeasible)
        throw InfeasibleError("pad_default: tree already has too many zeros");
    MaskTree out = t;
    long need = cls.deficit;
    for (long m = 1; m < out.node_count() && need > 0; ++m) {
        if (out.state(m) != NodeState::Free) continue;
        bool below_zero = false;
        for (long a = out.parent(m); a > 0; a = out.parent(a)) {
            if (out.state(a) == NodeState::Zero) {
                below_zero = true;
                break;
            }
        }
        if (below_zero) {
            out.set_zero(m);
            --need;
        }
    }
    if (need > 0)
        throw std::runtime_error("pad_default: not enough free nodes below zeros; pass an explicit pad list");
    return out;
}

MaskTree pad_with(const MaskTree& t, const std::vector<long>& nodes) {
    MaskTree out = t;
    for (long m : nodes) {
        if (m <= 0 || m >= out.node_count())
            throw TransformError("pad_with: node out of range", m);
        if (out.state(m) != NodeState::Free)
            throw TransformError("pad_with: node is not free", m);
        out.set_zero(m);
    }
    return out;
}

std::vector<cplx> phi_hat_tree(const MaskTree& t) {
    if (!t.solved()) throw std::logic_error("phi_hat_tree: tree has unsolved nodes");
    std::vector<cplx> out(t.node_count());
    out[0] = cplx(1.0);
    for (long m = 1; m < t.node_count(); ++m) out[m] = t.value(m) * out[t.parent(m)];
    return out;
}

std::vector<cplx> shift_tree(const std::vector<cplx>& phi_hat, int p) {
    std::vector<cplx> out(phi_hat.size());
    out[0] = cplx(1.0);
    for (long m = 1; m < (long)phi_hat.size(); ++m)
        out[m] = (m < p) ? cplx(1.0) : phi_hat[m / p];
    return out;
}

std::vector<char> phi_hat_zero_flags(const MaskTree& t) {
    std::vector<char> out(t.node_count(), 0);
    for (long m = 1; m < t.node_count(); ++m)
        out[m] = (t.state(m) == NodeState::Zero) || out[t.parent(m)];
    return out;
}

std::vector<char> shift_zero_flags(const std::vector<char>& phi_flags, int p) {
    std::vector<char> out(phi_flags.size(), 0);
    for (long m = p; m < (long)phi_flags.size(); ++m) out[m] = phi_flags[m / p];
    return out;
}

DualCoset node_coset(const GroupParams& params, long m) {
    std::vector<std::pair<int, int>> entries;
    int idx = -params.N;
    while (m > 0) {
        int d = static_cast<int>(m % params.p);
        if (d != 0) entries.emplace_back(idx, d);
        m /= params.p;
        ++idx;
    }
    return DualCoset{-params.N, Word::of(std::move(entries))};
}

long coset_node(const GroupParams& params, const DualCoset& c) {
    if (c.level != -params.N)
        throw std::invalid_argument("coset_node: coset level must be -N");
    long m = 0;
    for (auto& [j, d] : c.rep.entries()) {
        if (j < -params.N || j > params.M)
            throw std::invalid_argument("coset_node: exponent index out of range");
        m += d * ipow(params.p, j + params.N);
    }
    return m;
}

}  // namespace padic
