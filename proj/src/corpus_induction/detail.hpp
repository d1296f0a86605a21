#pragma once

#include <string_view>

#include "slg/core/seed_set.hpp"
#include "slg/corpus/distant_label.hpp"

namespace slg::detail {

/// Throws DegenerateSeedsError unless both polar classes have documents.
void require_both_classes(const LabeledDocumentSet& labeled);
/// Literal seed or matched by a seed pattern.
bool is_seed_term(const SeedSet& seeds, std::string_view term);

}  // namespace slg::detail
