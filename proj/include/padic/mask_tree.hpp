#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "padic/group.hpp"

namespace padic {

/// A tree operation was applied at a node that does not satisfy its
/// precondition; `node` names the offender.
struct TransformError : std::invalid_argument {
    long node;
    TransformError(const std::string& what, long node_) : std::invalid_argument(what), node(node_) {}
};

/// The tree has a root-to-leaf path without a zero: the mask would not give a
/// compactly supported phi_hat at level M+1.  `node` is a witness leaf.
struct InvalidTreeError : std::runtime_error {
    long node;
    InvalidTreeError(const std::string& what, long node_) : std::runtime_error(what), node(node_) {}
};

/// Theorem 2.01 case 3: too many zeros, the values do not define a mask.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class NodeState : unsigned char {
    Zero,   ///< structural zero, member of Lambda_0(T)
    Free,   ///< symbolic-nonzero, value not yet determined
    Value,  ///< concrete complex value (root is always Value 1)
};

/**
 * The rooted p-adic mask tree T(m_0).
 *
 * Node m < p^H (H = M+N+1) holds the mask value on the dual coset
 * G_{-N}^bot r_{-N}^{d_0} r_{-N+1}^{d_1} ... where (d_0, ..., d_{s-1}) are the
 * base-p digits of m; parent(m) = m div p; level(m) = number of digits.
 * Leaves (level H) are the cosets of the annulus G_{M+1}^bot \ G_M^bot.
 */
class MaskTree {
public:
    explicit MaskTree(const GroupParams& params);

    const GroupParams& params() const { return params_; }
    long node_count() const { return (long)states_.size(); }
    int height() const { return params_.height(); }

    NodeState state(long m) const { return states_.at(m); }
    cplx value(long m) const;
    bool is_zero(long m) const { return states_.at(m) == NodeState::Zero; }

    void set_zero(long m);
    void set_free(long m);
    void set_value(long m, cplx v);

    int level_of(long m) const;
    long parent(long m) const { return m / params_.p; }
    bool is_leaf(long m) const { return m >= node_count() / params_.p; }
    long first_leaf() const { return node_count() / params_.p; }

    std::vector<long> zero_set() const;
    long zero_count() const;

    /// Valid-for-masks flag: every root-to-leaf path contains a zero.
    bool every_path_has_zero() const;
    /// A leaf whose path to the root is zero-free, or -1 if none.
    long first_uncovered_leaf() const;

    /// True once every node is Zero or Value (ready for phi_hat products).
    bool solved() const;

private:
    GroupParams params_;
    std::vector<NodeState> states_;
    std::vector<cplx> values_;
};

/// The initial tree of the algorithm: zeros at p^N .. p^{N+1}-2 and at
/// p^{2N+1}-p^N .. p^{2N+1}-1, root 1, everything else symbolic-nonzero.
/// Requires M == N.
MaskTree initial_tree(const GroupParams& params);

/// Elementary transformation (i): node p^{N-1}+j is nonzero and all its
/// children are zero; afterwards the parent is zero and the children free.
/// #Lambda_0 drops by p-1.
MaskTree transform_i(const MaskTree& t, long j);

/// Elementary transformation (ii): node p^N+l is zero and its children are
/// nonzero; afterwards the node is free and the children zero.
/// #Lambda_0 grows by p-1.
MaskTree transform_ii(const MaskTree& t, long l);

enum class TreeClass { Determines, DeterminesAfterPadding, Infeasible };

struct ClassifyResult {
    TreeClass kind;
    long deficit;  ///< zeros missing from p^{N+1}-1 (padding case only)
};

/// Theorem 2.01 trichotomy on #Lambda_0(T).  Throws InvalidTreeError when
/// some path is zero-free.
ClassifyResult classify(const MaskTree& t);

/**
 * Default padding for the DeterminesAfterPadding case: zero out the
 * smallest-index free nodes that already have a structural zero strictly
 * above them.  Such nodes never change the structural zero set of phi_hat,
 * so the frame built from the padded tree has the same supports.
 */
MaskTree pad_default(const MaskTree& t);

/// Explicit padding at the given nodes (each must be free).
MaskTree pad_with(const MaskTree& t, const std::vector<long>& nodes);

/// Path products phi_hat_m = lambda_m lambda_{m div p} ... lambda_0 for every
/// node; requires a solved tree.
std::vector<cplx> phi_hat_tree(const MaskTree& t);

/// Step 4: children inherit the parent's phi_hat value; level-1 nodes and the
/// root become 1.  Result is the node table of phi_hat(chi A^{-1}).
std::vector<cplx> shift_tree(const std::vector<cplx>& phi_hat, int p);

/// Structural zero flags of phi_hat: zero iff some ancestor-or-self is in
/// Lambda_0.
std::vector<char> phi_hat_zero_flags(const MaskTree& t);

/// Structural zero flags of the shifted tree.
std::vector<char> shift_zero_flags(const std::vector<char>& phi_flags, int p);

/// The dual coset encoded by node m (level -N, word from the digits of m).
DualCoset node_coset(const GroupParams& params, long m);

/// Inverse of node_coset for words with exponents in [-N, M].
long coset_node(const GroupParams& params, const DualCoset& c);

}  // namespace padic
