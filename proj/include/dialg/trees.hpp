#pragma once

#include "dialg/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dialg {

// The two dialgebra operations: Left is ⊣, Right is ⊢.
enum class Op { Left, Right };

inline const char* op_name(Op op) { return op == Op::Left ? "left" : "right"; }

// Planar binary tree with n trivalent vertices and n+1 leaves, immutable.
// The label is the inorder sequence of subtree sizes, matching the grafting
// rule [y1 p+q+1 y2] with zeros deleted; e.g. Y_3 = {[123],[213],[131],[312],[321]}.
class Tree {
public:
    static constexpr int max_vertices = 12;

    Tree(); // the 0-tree (a single leaf)
    static Tree graft(const Tree& left, const Tree& right);

    int vertices() const { return node_->n; }
    int leaves() const { return node_->n + 1; }
    bool is_leaf() const { return node_->n == 0; }
    Tree left() const;
    Tree right() const;

    // Deletes leaf i (0 ≤ i ≤ n, n ≥ 1) and contracts the freed edge.
    Tree face(int i) const;

    // Operation symbol at index i, 0 ≤ i ≤ n: index 0 keyed on left-subtree
    // triviality, interior indices on leaf orientation, index n on
    // right-subtree triviality.
    Op circ(int i) const;

    // True iff leaf i is the left child of its vertex (drawn like '\').
    bool leaf_is_left_child(int i) const;

    std::vector<int> digits() const;
    std::string label() const;

    bool operator==(const Tree& rhs) const { return digits() == rhs.digits(); }
    bool operator!=(const Tree& rhs) const { return !(*this == rhs); }
    bool operator<(const Tree& rhs) const;

private:
    struct Node {
        std::shared_ptr<const Node> left, right;
        int n;
    };
    explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
    static void collect_digits(const Node* node, std::vector<int>& out);
};

// All n-trees in label order; Catalan(n) of them. Throws cap_error for n > 12.
const std::vector<Tree>& enumerate_trees(int n);

// Position of y within enumerate_trees(y.vertices()).
int tree_index(const Tree& y);

Tree parse_tree_label(const std::string& label);

long long catalan(int n);

} // namespace dialg
