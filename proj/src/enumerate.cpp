#include <algorithm>

#include "liftfact/error.hpp"
#include "liftfact/factor.hpp"

namespace liftfact {

namespace {

bool same_step(const CcaStep& a, const CcaStep& b) {
  return a.left == b.left && a.right == b.right && a.next == b.next;
}

void expand(FactorizationTree& tree, std::size_t index, const EnumerateOptions& opts) {
  const PolyMatrix2 q = tree.nodes[index].quotient;
  if (is_terminal(q)) {
    TreeNode& node = tree.nodes[index];
    Factorization f;
    f.source = tree.root;
    f.steps = node.left;
    auto tail = cca_terminate(q);
    f.steps.insert(f.steps.end(), tail.begin(), tail.end());
    f.steps.insert(f.steps.end(), node.right.begin(), node.right.end());
    node.leaf = std::move(f);
    return;
  }
  if (tree.nodes[index].depth >= opts.max_depth) {
    tree.nodes[index].truncated = true;
    return;
  }
  const DetMonomial dm = pr_check(q);
  const long measure = reduction_measure(q, dm.delay);
  std::size_t max_m = dm.delay;
  // Leaves are checked by multiplying back; per-step rechecks cost more
  // than the search itself.
  CcaOptions step_opts;
  step_opts.verify = false;
  step_opts.det = dm;
  if (opts.max_multiplicity) max_m = std::min(max_m, *opts.max_multiplicity);

  std::vector<TreeEdge> edges;
  for (Site site : {Site::kRow0, Site::kRow1, Site::kCol0, Site::kCol1}) {
    for (std::size_t m = 0; m <= max_m; ++m) {
      StepDirective d{site, m};
      CcaStep st;
      try {
        st = cca_step(q, d, step_opts);
      } catch (const Error&) {
        continue;
      }
      if (reduction_measure(st.next, st.next_det.delay) >= measure) continue;
      auto it = std::find_if(edges.begin(), edges.end(), [&](const TreeEdge& e) { return same_step(e.step, st); });
      if (it != edges.end()) {
        it->directives.push_back(d);
      } else {
        edges.push_back(TreeEdge{{d}, std::move(st), 0});
      }
    }
  }
  if (opts.max_nodes && tree.nodes.size() + edges.size() > *opts.max_nodes) {
    tree.nodes[index].truncated = true;
    return;
  }
  for (auto& e : edges) {
    TreeNode child;
    child.quotient = e.step.next;
    child.depth = tree.nodes[index].depth + 1;
    child.left = tree.nodes[index].left;
    child.left.insert(child.left.end(), e.step.left.begin(), e.step.left.end());
    child.right = e.step.right;
    child.right.insert(child.right.end(), tree.nodes[index].right.begin(), tree.nodes[index].right.end());
    e.child = tree.nodes.size();
    tree.nodes.push_back(std::move(child));
  }
  tree.nodes[index].children = edges;
  for (const auto& e : edges) expand(tree, e.child, opts);
}

}  // namespace

FactorizationTree enumerate(const PolyMatrix2& h, const EnumerateOptions& opts) {
  pr_check(h);
  FactorizationTree tree;
  tree.root = h;
  CcaStep root = strip_content(h);
  TreeNode node;
  node.quotient = root.next;
  node.left = root.left;
  node.right = root.right;
  tree.nodes.push_back(std::move(node));
  expand(tree, 0, opts);
  return tree;
}

std::vector<Factorization> FactorizationTree::leaves() const {
  std::vector<Factorization> out;
  // Depth-first, in child order.
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    const TreeNode& n = nodes[i];
    if (n.leaf) out.push_back(*n.leaf);
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(it->child);
  }
  return out;
}

std::size_t FactorizationTree::depth() const {
  std::size_t d = 0;
  for (const auto& n : nodes) d = std::max(d, n.depth);
  return d;
}

}  // namespace liftfact
