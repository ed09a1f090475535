#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liftfact/lifting.hpp"

namespace liftfact {

enum class Site { kRow0, kRow1, kCol0, kCol1 };

std::string_view site_name(Site s);  // "R0", "R1", "C0", "C1"
Site parse_site(std::string_view text);

struct StepDirective {
  Site site = Site::kCol0;
  std::size_t multiplicity = 0;  // SGDA M; 0 is classical division

  friend bool operator==(const StepDirective&, const StepDirective&) = default;
};

struct Strategy {
  std::vector<StepDirective> directives;
};

// Grammar: comma-separated R0|R1|C0|C1 tokens, each with optional "@M=<n>".
Strategy parse_strategy(std::string_view text);
std::string render(const StepDirective& d);
std::string render(const Strategy& s);

// Q = left * next * right.  Column sites reduce a row and emit left
// factors; row sites reduce a column and emit right factors.
struct CcaStep {
  std::vector<LiftingStep> left;
  std::vector<LiftingStep> right;
  PolyMatrix2 next;
  DetMonomial next_det;
  std::string note;
};

struct CcaOptions {
  // Recheck the degree-reducing bound and the product identity at every division.
  bool verify = true;
  // det of the input when the caller already knows it.
  std::optional<DetMonomial> det;
};

CcaStep cca_step(const PolyMatrix2& q, const StepDirective& d, const CcaOptions& opts = {});

// Pulls monomial content out of every row (left delays) and column
// (right delays).
CcaStep strip_content(const PolyMatrix2& q);

bool is_terminal(const PolyMatrix2& q);
std::vector<LiftingStep> cca_terminate(const PolyMatrix2& q);

Factorization factor_cca(const PolyMatrix2& h, const Strategy& strategy, const CcaOptions& opts = {});
Factorization factor_eea(const PolyMatrix2& h, Site site);

struct EnumerateOptions {
  std::size_t max_depth = 64;
  // Upper bound on SGDA multiplicity; the residual determinantal delay
  // always bounds it as well.
  std::optional<std::size_t> max_multiplicity;
  // Stop growing the tree once it holds this many nodes; unexpanded
  // quotients are marked truncated.
  std::optional<std::size_t> max_nodes;
};

struct TreeEdge {
  std::vector<StepDirective> directives;  // merged siblings share an edge
  CcaStep step;
  std::size_t child = 0;
};

struct TreeNode {
  PolyMatrix2 quotient;
  // root = left * quotient * right
  std::vector<LiftingStep> left;
  std::vector<LiftingStep> right;
  std::size_t depth = 0;
  std::vector<TreeEdge> children;
  std::optional<Factorization> leaf;
  bool truncated = false;
};

struct FactorizationTree {
  PolyMatrix2 root;
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  std::vector<Factorization> leaves() const;
  std::size_t depth() const;
};

FactorizationTree enumerate(const PolyMatrix2& h, const EnumerateOptions& opts = {});

// Sum of entry degrees plus the residual delay; every enumerated division
// strictly lowers it.
long reduction_measure(const PolyMatrix2& q);
long reduction_measure(const PolyMatrix2& q, std::size_t residual_delay);

}  // namespace liftfact
