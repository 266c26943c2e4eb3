#pragma once

#include "dfk/editing_kernel.hpp"

namespace dfk {

// Rule DD-3: drop every edge without the type-I mark, then every vertex
// without the type-I vertex mark (exactly the now-isolated ones).
RulePassResult dd3_strip(Instance inst, PartitionLabels labels);

// Rule DD-4: delete vertices outside all small type-I maximal cliques,
// lowest label first, until every vertex carries the small mark.
RulePassResult dd4_apply_exhaustively(Instance inst, PartitionLabels labels);

// 18k^3 + 2k
long long deletion_size_bound(int k);

KernelResult kernelize_deletion(Instance inst);

}  // namespace dfk
