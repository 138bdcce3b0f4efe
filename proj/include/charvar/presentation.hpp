#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charvar/word.hpp"

namespace charvar {

/// Catalog facts attached to presentations built by the constructions module.
/// Parsed presentations never carry them.
struct GroupTags {
  /// The group has an aspherical chain model in the catalog.
  bool aspherical = false;
  /// The presentation 2-complex itself is aspherical (surface and free groups).
  bool two_complex_aspherical = false;
  /// Euler characteristic when the group is the fundamental group of a curve.
  std::optional<long> curve_euler;
};

/// Finite presentation <x_1..x_n | r_1..r_s> with freely reduced relators.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators,
               GroupTags tags = {});

  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return names_.size(); }
  std::size_t relator_count() const noexcept { return relators_.size(); }
  const GroupTags& tags() const noexcept { return tags_; }
  void set_tags(GroupTags tags) { tags_ = std::move(tags); }

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Text in the presentation language, parseable by parse_presentation.
  std::string to_text() const;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  GroupTags tags_;
};

/// Parses the line-oriented presentation language:
///
///     # comment
///     gens a, b;
///     rel [a,b] a^2 B^-1;
///
/// Capitalized names (when the lowercase name is a generator) and `^-1`
/// denote inverses; `[u,v]` is u v u^-1 v^-1. Errors carry line:column.
Presentation parse_presentation(std::string_view text);

}  // namespace charvar
