#include "dialg/trees.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace dialg {

Tree::Tree()
{
    static const auto leaf = std::make_shared<const Node>(Node{nullptr, nullptr, 0});
    node_ = leaf;
}

Tree Tree::graft(const Tree& left, const Tree& right)
{
    int n = left.vertices() + right.vertices() + 1;
    if (n > max_vertices)
        throw cap_error("degree too large: trees are capped at 12 vertices");
    return Tree(std::make_shared<const Node>(Node{left.node_, right.node_, n}));
}

Tree Tree::left() const
{
    if (is_leaf())
        throw input_error("the 0-tree has no subtrees");
    return Tree(node_->left);
}

Tree Tree::right() const
{
    if (is_leaf())
        throw input_error("the 0-tree has no subtrees");
    return Tree(node_->right);
}

Tree Tree::face(int i) const
{
    if (is_leaf())
        throw input_error("face map undefined on the 0-tree");
    if (i < 0 || i > vertices())
        throw input_error("face index out of range");
    int p = node_->left->n; // left subtree owns leaves 0..p
    if (i <= p) {
        if (node_->left->n == 0)
            return Tree(node_->right);
        return graft(Tree(node_->left).face(i), Tree(node_->right));
    }
    if (node_->right->n == 0)
        return Tree(node_->left);
    return graft(Tree(node_->left), Tree(node_->right).face(i - p - 1));
}

bool Tree::leaf_is_left_child(int i) const
{
    if (is_leaf())
        throw input_error("the 0-tree has no labelled leaves");
    int p = node_->left->n;
    if (i <= p) {
        if (node_->left->n == 0)
            return true;
        return Tree(node_->left).leaf_is_left_child(i);
    }
    if (node_->right->n == 0)
        return false;
    return Tree(node_->right).leaf_is_left_child(i - p - 1);
}

Op Tree::circ(int i) const
{
    if (is_leaf())
        throw input_error("operation symbols undefined on the 0-tree");
    int n = vertices();
    if (i < 0 || i > n)
        throw input_error("operation index out of range");
    if (i == 0)
        return node_->left->n == 0 ? Op::Left : Op::Right;
    if (i == n)
        return node_->right->n == 0 ? Op::Right : Op::Left;
    return leaf_is_left_child(i) ? Op::Left : Op::Right;
}

void Tree::collect_digits(const Node* node, std::vector<int>& out)
{
    if (node->n == 0)
        return;
    collect_digits(node->left.get(), out);
    out.push_back(node->n);
    collect_digits(node->right.get(), out);
}

std::vector<int> Tree::digits() const
{
    std::vector<int> out;
    out.reserve(vertices());
    collect_digits(node_.get(), out);
    return out;
}

std::string Tree::label() const
{
    std::vector<int> d = digits();
    std::ostringstream os;
    os << '[';
    if (d.empty()) {
        os << '0';
    } else if (vertices() < 10) {
        for (int x : d)
            os << x;
    } else {
        for (size_t i = 0; i < d.size(); ++i) {
            if (i)
                os << ',';
            os << d[i];
        }
    }
    os << ']';
    return os.str();
}

bool Tree::operator<(const Tree& rhs) const
{
    std::vector<int> a = digits(), b = rhs.digits();
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

long long catalan(int n)
{
    long long c = 1;
    for (int i = 0; i < n; ++i)
        c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

const std::vector<Tree>& enumerate_trees(int n)
{
    if (n < 0)
        throw input_error("tree degree must be non-negative");
    if (n > Tree::max_vertices)
        throw cap_error("degree too large: trees are capped at 12 vertices");
    static std::vector<std::vector<Tree>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    cache.reserve(Tree::max_vertices + 1); // keep returned references stable
    while (static_cast<int>(cache.size()) <= n) {
        int k = static_cast<int>(cache.size());
        std::vector<Tree> trees;
        if (k == 0) {
            trees.push_back(Tree());
        } else {
            for (int p = 0; p < k; ++p)
                for (const Tree& a : cache[p])
                    for (const Tree& b : cache[k - 1 - p])
                        trees.push_back(Tree::graft(a, b));
            std::sort(trees.begin(), trees.end());
        }
        cache.push_back(std::move(trees));
    }
    return cache[n];
}

int tree_index(const Tree& y)
{
    const auto& all = enumerate_trees(y.vertices());
    auto it = std::lower_bound(all.begin(), all.end(), y);
    if (it == all.end() || *it != y)
        throw input_error("tree not found in its enumeration");
    return static_cast<int>(it - all.begin());
}

namespace {

Tree tree_from_digits(const std::vector<int>& digits, int lo, int hi)
{
    int n = hi - lo;
    if (n == 0)
        return Tree();
    int root = -1;
    for (int i = lo; i < hi; ++i)
        if (digits[i] == n) {
            if (root != -1)
                throw input_error("invalid tree label digits");
            root = i;
        }
    if (root == -1)
        throw input_error("invalid tree label digits");
    return Tree::graft(tree_from_digits(digits, lo, root), tree_from_digits(digits, root + 1, hi));
}

} // namespace

Tree parse_tree_label(const std::string& label)
{
    if (label.size() < 3 || label.front() != '[' || label.back() != ']')
        throw input_error("invalid tree label: '" + label + "'");
    std::string body = label.substr(1, label.size() - 2);
    std::vector<int> digits;
    if (body == "0") {
        // the 0-tree
    } else if (body.find(',') != std::string::npos) {
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ','))
            digits.push_back(std::stoi(tok));
    } else {
        for (char c : body) {
            if (c < '1' || c > '9')
                throw input_error("invalid tree label: '" + label + "'");
            digits.push_back(c - '0');
        }
    }
    int n = static_cast<int>(digits.size());
    if (n > Tree::max_vertices)
        throw cap_error("degree too large: trees are capped at 12 vertices");
    return tree_from_digits(digits, 0, n);
}

} // namespace dialg
