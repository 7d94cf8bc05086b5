#include "posort/finger_tree.hpp"

#include <bit>
#include <string>

#include "posort/errors.hpp"

namespace posort {

namespace {

int ceil_log2(std::uint64_t v) {  // v >= 1
    return static_cast<int>(std::bit_width(v - 1));
}

}  // namespace

int FingerTree::new_node() {
    pool_.emplace_back();
    return static_cast<int>(pool_.size()) - 1;
}

FingerTree::FingerTree(std::span<const int> leaves, int universe) {
    if (universe < 0) throw BadParams("universe must be nonnegative");
    if (leaves.empty()) throw BadParams("tree needs at least one leaf");
    leaf_of_.assign(universe, -1);
    pool_.reserve(leaves.size() * 2 + 8);

    std::vector<int> row;
    row.reserve(leaves.size());
    int prev = -1;
    for (int id : leaves) {
        if (id < 0 || id >= universe)
            throw VertexOutOfRange("leaf id outside the universe");
        if (leaf_of_[id] != -1)
            throw DuplicateElement("duplicate leaf " + std::to_string(id));
        const int nd = new_node();
        pool_[nd].elem = id;
        pool_[nd].min_elem = id;
        leaf_of_[id] = nd;
        if (prev != -1) {
            pool_[prev].right = nd;
            pool_[nd].left = prev;
        }
        prev = nd;
        row.push_back(nd);
    }
    leaf_count_ = leaves.size();

    // Bottom-up build: groups of 3, switching to 2 when 2 or 4 remain, so
    // no group of 1 can occur.
    while (row.size() > 1) {
        std::vector<int> next_row;
        next_row.reserve(row.size() / 2 + 1);
        std::size_t i = 0;
        int prev_parent = -1;
        while (i < row.size()) {
            const std::size_t remaining = row.size() - i;
            const std::size_t take = (remaining == 2 || remaining == 4) ? 2 : 3;
            const int parent = new_node();
            pool_[parent].degree = static_cast<int>(take);
            for (std::size_t j = 0; j < take; ++j) {
                pool_[parent].child[j] = row[i + j];
                pool_[row[i + j]].parent = parent;
            }
            pool_[parent].min_elem = pool_[row[i]].min_elem;
            if (prev_parent != -1) {
                pool_[prev_parent].right = parent;
                pool_[parent].left = prev_parent;
            }
            prev_parent = parent;
            next_row.push_back(parent);
            i += take;
        }
        row.swap(next_row);
    }
    root_ = row[0];
}

bool FingerTree::contains(int id) const {
    return id >= 0 && id < static_cast<int>(leaf_of_.size()) &&
           leaf_of_[id] != -1;
}

int FingerTree::successor(int id) const {
    if (!contains(id)) throw ElementAbsent("successor: " + std::to_string(id));
    const int r = pool_[leaf_of_[id]].right;
    return r == -1 ? -1 : pool_[r].elem;
}

int FingerTree::leftmost_leaf() const {
    int v = root_;
    while (pool_[v].degree > 0) v = pool_[v].child[0];
    return v;
}

std::vector<int> FingerTree::leaves_in_order() const {
    std::vector<int> out;
    out.reserve(leaf_count_);
    for (int v = leftmost_leaf(); v != -1; v = pool_[v].right)
        out.push_back(pool_[v].elem);
    return out;
}

FingerTree::SearchResult FingerTree::finger_search(int probe, int finger,
                                                   LinearOracle& oracle) const {
    if (!contains(finger))
        throw ElementAbsent("finger " + std::to_string(finger) + " not in sequence");
    if (contains(probe))
        throw DuplicateElement("probe " + std::to_string(probe) + " already in sequence");
    const std::uint64_t before = oracle.query_count();

    if (!oracle.precedes(finger, probe))
        throw FingerNotBefore("finger " + std::to_string(finger) +
                              " does not precede probe " + std::to_string(probe));

    // Ascend the finger's ancestor chain. Let w be the level neighbor to
    // the right and w2 the one after it. While min(w2) precedes the probe,
    // everything under w does too, so the answer lies at least |sub(w)|
    // leaves further right and we can afford the next level. Otherwise the
    // answer is under u or w.
    int u = leaf_of_[finger];
    int top;
    for (;;) {
        const int w = pool_[u].right;
        if (w == -1) {  // nothing right of u at all
            top = u;
            break;
        }
        const int w2 = pool_[w].right;
        if (w2 == -1 || !oracle.precedes(pool_[w2].min_elem, probe)) {
            top = oracle.precedes(pool_[w].min_elem, probe) ? w : u;
            break;
        }
        u = pool_[u].parent;
    }

    // Descend to the last leaf preceding the probe. Child minima increase
    // left to right, so the target child is the last one whose minimum
    // precedes the probe.
    int v = top;
    while (pool_[v].degree > 0) {
        const Node& nd = pool_[v];
        int t = 0;
        while (t + 1 < nd.degree &&
               oracle.precedes(pool_[nd.child[t + 1]].min_elem, probe))
            ++t;
        v = nd.child[t];
    }

    SearchResult res;
    res.predecessor = pool_[v].elem;
    res.distance = 1;
    for (int c = leaf_of_[finger]; c != v; c = pool_[c].right) ++res.distance;
    res.comparisons = static_cast<int>(oracle.query_count() - before);
    if (res.comparisons >
        4 * ceil_log2(static_cast<std::uint64_t>(res.distance) + 1) + 4)
        throw InternalInvariantViolation("finger search exceeded its comparison budget");
    return res;
}

void FingerTree::insert_child_after(int parent, int pos, int node) {
    Node& p = pool_[parent];
    for (int i = p.degree; i > pos + 1; --i) p.child[i] = p.child[i - 1];
    p.child[pos + 1] = node;
    ++p.degree;
    pool_[node].parent = parent;
}

void FingerTree::split(int node) {
    const int rhs = new_node();
    pool_[rhs].degree = 2;
    pool_[rhs].child[0] = pool_[node].child[3];
    pool_[rhs].child[1] = pool_[node].child[4];
    pool_[node].child[3] = -1;
    pool_[node].child[4] = -1;
    pool_[node].degree = 3;
    pool_[pool_[rhs].child[0]].parent = rhs;
    pool_[pool_[rhs].child[1]].parent = rhs;
    pool_[rhs].min_elem = pool_[pool_[rhs].child[0]].min_elem;

    const int right = pool_[node].right;
    pool_[rhs].left = node;
    pool_[rhs].right = right;
    pool_[node].right = rhs;
    if (right != -1) pool_[right].left = rhs;
    ++splits_;

    const int parent = pool_[node].parent;
    if (parent == -1) {
        const int root = new_node();
        pool_[root].degree = 2;
        pool_[root].child[0] = node;
        pool_[root].child[1] = rhs;
        pool_[root].min_elem = pool_[node].min_elem;
        pool_[node].parent = root;
        pool_[rhs].parent = root;
        root_ = root;
        ++splits_;
        return;
    }
    int pos = 0;
    while (pool_[parent].child[pos] != node) ++pos;
    insert_child_after(parent, pos, rhs);
}

void FingerTree::finger_insert(int after, int value) {
    if (!contains(after))
        throw ElementAbsent("insert after " + std::to_string(after));
    if (value < 0 || value >= static_cast<int>(leaf_of_.size()))
        throw VertexOutOfRange("leaf id outside the universe");
    if (leaf_of_[value] != -1)
        throw DuplicateElement("leaf " + std::to_string(value) + " already present");

    const int q = leaf_of_[after];
    const int leaf = new_node();
    pool_[leaf].elem = value;
    pool_[leaf].min_elem = value;
    leaf_of_[value] = leaf;
    ++leaf_count_;

    const int right = pool_[q].right;
    pool_[leaf].left = q;
    pool_[leaf].right = right;
    pool_[q].right = leaf;
    if (right != -1) pool_[right].left = leaf;

    const int parent = pool_[q].parent;
    if (parent == -1) {
        // q was the whole tree; grow a root above the two leaves.
        const int root = new_node();
        pool_[root].degree = 2;
        pool_[root].child[0] = q;
        pool_[root].child[1] = leaf;
        pool_[root].min_elem = pool_[q].min_elem;
        pool_[q].parent = root;
        pool_[leaf].parent = root;
        root_ = root;
        ++splits_;
        return;
    }
    int pos = 0;
    while (pool_[parent].child[pos] != q) ++pos;
    insert_child_after(parent, pos, leaf);

    int cur = parent;
    while (cur != -1 && pool_[cur].degree == 5) {
        const int next = pool_[cur].parent;
        split(cur);
        cur = next;
    }
}

void FingerTree::validate() const {
    // Breadth-first by level; queue order within a level is left-to-right.
    std::vector<std::vector<int>> levels;
    std::vector<std::pair<int, int>> queue{{root_, 0}};
    std::size_t head = 0;
    while (head < queue.size()) {
        const auto [v, depth] = queue[head++];
        if (static_cast<int>(levels.size()) <= depth) levels.emplace_back();
        levels[depth].push_back(v);
        const Node& nd = pool_[v];
        if (nd.degree > 0) {
            if (nd.degree < 2 || nd.degree > 4)
                throw InternalInvariantViolation("internal degree outside 2..4");
            if (nd.min_elem != pool_[nd.child[0]].min_elem)
                throw InternalInvariantViolation("stale subtree minimum");
            for (int i = 0; i < nd.degree; ++i) {
                if (pool_[nd.child[i]].parent != v)
                    throw InternalInvariantViolation("bad parent pointer");
                queue.emplace_back(nd.child[i], depth + 1);
            }
        } else if (nd.elem < 0 || leaf_of_[nd.elem] != v) {
            throw InternalInvariantViolation("leaf handle mismatch");
        }
    }
    for (const auto& level : levels) {
        for (std::size_t i = 0; i < level.size(); ++i) {
            const Node& nd = pool_[level[i]];
            const int want_left = i == 0 ? -1 : level[i - 1];
            const int want_right = i + 1 == level.size() ? -1 : level[i + 1];
            if (nd.left != want_left || nd.right != want_right)
                throw InternalInvariantViolation("broken level links");
        }
    }
    const auto& leaf_level = levels.back();
    if (leaf_level.size() != leaf_count_)
        throw InternalInvariantViolation("leaf count mismatch");
    for (int v : leaf_level)
        if (pool_[v].degree != 0)
            throw InternalInvariantViolation("leaves not at equal depth");
}

}  // namespace posort
