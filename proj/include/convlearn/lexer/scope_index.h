#ifndef CONVLEARN_LEXER_SCOPE_INDEX_H_
#define CONVLEARN_LEXER_SCOPE_INDEX_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "convlearn/lexer/token.h"

namespace convlearn {

// A brace-delimited region. Region 0 is the whole file. A parenthesized list
// directly in front of a body (method parameters, catch and for headers) is
// part of the body's region.
struct ScopeRegion {
  std::size_t begin = 0;  // token index, inclusive
  std::size_t end = 0;    // token index, exclusive
  int parent = -1;
  int depth = 0;
};

// Occurrences of one lexeme that are treated as one binding.
struct IdentifierGroup {
  std::string lexeme;
  int region = 0;
  std::vector<std::size_t> occurrences;  // token indices, ascending

  std::size_t first() const { return occurrences.front(); }
  std::size_t last() const { return occurrences.back(); }
};

class ScopeIndex {
 public:
  static ScopeIndex Build(std::span<const Token> tokens);

  const std::vector<IdentifierGroup>& groups() const { return groups_; }
  const std::vector<ScopeRegion>& regions() const { return regions_; }

  // Group id of the identifier at `token_index`, or -1.
  int GroupAt(std::size_t token_index) const;
  // Ids of the groups for `lexeme`, in order of first occurrence.
  std::vector<int> GroupsOf(std::string_view lexeme) const;
  bool IsAncestorOrSelf(int ancestor, int region) const;

  bool balanced() const { return balanced_; }
  const std::string& warning() const { return warning_; }

 private:
  std::vector<ScopeRegion> regions_;
  std::vector<IdentifierGroup> groups_;
  std::vector<int> group_of_token_;
  bool balanced_ = true;
  std::string warning_;
};

enum class IdentifierCategory { kVariable, kMethod, kType };

std::string_view IdentifierCategoryName(IdentifierCategory category);

// Lexical guess: after '.' is a method, an initial capital is a type.
IdentifierCategory CategorizeIdentifier(std::span<const Token> tokens,
                                        std::size_t index);

}  // namespace convlearn

#endif  // CONVLEARN_LEXER_SCOPE_INDEX_H_
