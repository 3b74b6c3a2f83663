#include "convlearn/lexer/scope_index.h"

#include <algorithm>
#include <map>

namespace convlearn {
namespace {

bool Is(const Token& t, std::string_view lexeme) {
  return t.kind != TokenKind::kIdentifier && t.kind != TokenKind::kLiteral &&
         t.lexeme == lexeme;
}

// Index of the ')' closing a header that belongs to the body opened at
// `open`, or -1. Handles "m(a) {", "m(a) throws E, F {" and "(a) -> {".
long HeaderClose(std::span<const Token> tokens, std::size_t open) {
  if (open == 0) return -1;
  long j = static_cast<long>(open) - 1;
  if (Is(tokens[j], "->")) --j;
  if (j >= 0 && !Is(tokens[j], ")")) {
    long k = j;
    while (k >= 0 && (tokens[k].is_identifier() || Is(tokens[k], ".") ||
                      Is(tokens[k], ",") || Is(tokens[k], "<") ||
                      Is(tokens[k], ">"))) {
      --k;
    }
    if (k >= 1 && tokens[k].lexeme == "throws" && Is(tokens[k - 1], ")")) {
      j = k - 1;
    } else {
      return -1;
    }
  }
  return j >= 0 && Is(tokens[j], ")") ? j : -1;
}

long MatchingOpenParen(std::span<const Token> tokens, long close) {
  int depth = 0;
  for (long k = close; k >= 0; --k) {
    const Token& t = tokens[k];
    if (Is(t, ")")) {
      ++depth;
    } else if (Is(t, "(")) {
      if (--depth == 0) return k;
    } else if (Is(t, "{") || Is(t, "}") || Is(t, ";")) {
      return -1;
    }
  }
  return -1;
}

// Conditions of if/while/switch stay with the enclosing region; only
// declarations (method, catch, for, lambda) bind names for the body.
bool HeaderBindsNames(std::span<const Token> tokens, long open_paren) {
  if (open_paren == 0) return true;
  const Token& before = tokens[open_paren - 1];
  if (before.kind != TokenKind::kKeyword) return true;
  return before.lexeme == "catch" || before.lexeme == "for";
}

}  // namespace

ScopeIndex ScopeIndex::Build(std::span<const Token> tokens) {
  ScopeIndex index;
  const std::size_t n = tokens.size();
  index.regions_.push_back({0, n, -1, 0});
  index.group_of_token_.assign(n, -1);

  std::vector<int> token_region(n, 0);
  std::vector<int> stack = {0};
  std::size_t stray_closes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (Is(tokens[i], "{")) {
      const int parent = stack.back();
      index.regions_.push_back(
          {i, n, parent, index.regions_[parent].depth + 1});
      stack.push_back(static_cast<int>(index.regions_.size()) - 1);
      token_region[i] = stack.back();
    } else if (Is(tokens[i], "}")) {
      token_region[i] = stack.back();
      if (stack.size() > 1) {
        index.regions_[stack.back()].end = i + 1;
        stack.pop_back();
      } else {
        ++stray_closes;
      }
    } else {
      token_region[i] = stack.back();
    }
  }
  const std::size_t unclosed = stack.size() - 1;

  if (stray_closes > 0 || unclosed > 0) {
    index.balanced_ = false;
    index.warning_ = "unbalanced braces (" + std::to_string(stray_closes) +
                     " unmatched '}', " + std::to_string(unclosed) +
                     " unclosed '{'); using whole-file scope";
    std::map<std::string, int> by_lexeme;
    for (std::size_t i = 0; i < n; ++i) {
      if (!tokens[i].is_identifier()) continue;
      auto [it, inserted] = by_lexeme.try_emplace(
          tokens[i].lexeme, static_cast<int>(index.groups_.size()));
      if (inserted) index.groups_.push_back({tokens[i].lexeme, 0, {}});
      index.groups_[it->second].occurrences.push_back(i);
      index.group_of_token_[i] = it->second;
    }
    return index;
  }

  for (std::size_t r = 1; r < index.regions_.size(); ++r) {
    ScopeRegion& region = index.regions_[r];
    const long close = HeaderClose(tokens, region.begin);
    if (close < 0) continue;
    const long open = MatchingOpenParen(tokens, close);
    if (open < 0 || !HeaderBindsNames(tokens, open)) continue;
    for (long k = open; k <= close; ++k) {
      if (token_region[k] == region.parent) token_region[k] = static_cast<int>(r);
    }
    region.begin = static_cast<std::size_t>(open);
  }

  // Groups are built in token order: an occurrence joins the deepest group of
  // its lexeme whose region encloses it; otherwise it opens a group in its own
  // region, absorbing groups that were opened in nested regions.
  std::map<std::string, std::vector<int>, std::less<>> live;
  std::vector<IdentifierGroup> raw;
  for (std::size_t i = 0; i < n; ++i) {
    if (!tokens[i].is_identifier()) continue;
    const int region = token_region[i];
    auto& ids = live[tokens[i].lexeme];
    int best = -1;
    for (int g : ids) {
      if (index.IsAncestorOrSelf(raw[g].region, region) &&
          (best < 0 ||
           index.regions_[raw[g].region].depth > index.regions_[raw[best].region].depth)) {
        best = g;
      }
    }
    if (best >= 0) {
      raw[best].occurrences.push_back(i);
      continue;
    }
    IdentifierGroup group{tokens[i].lexeme, region, {}};
    std::vector<int> kept;
    for (int g : ids) {
      if (index.IsAncestorOrSelf(region, raw[g].region)) {
        group.occurrences.insert(group.occurrences.end(),
                                 raw[g].occurrences.begin(),
                                 raw[g].occurrences.end());
        raw[g].occurrences.clear();
      } else {
        kept.push_back(g);
      }
    }
    group.occurrences.push_back(i);
    std::sort(group.occurrences.begin(), group.occurrences.end());
    kept.push_back(static_cast<int>(raw.size()));
    raw.push_back(std::move(group));
    ids = std::move(kept);
  }

  for (auto& group : raw) {
    if (!group.occurrences.empty()) index.groups_.push_back(std::move(group));
  }
  std::sort(index.groups_.begin(), index.groups_.end(),
            [](const IdentifierGroup& a, const IdentifierGroup& b) {
              return a.first() < b.first();
            });
  for (std::size_t g = 0; g < index.groups_.size(); ++g) {
    for (std::size_t t : index.groups_[g].occurrences) {
      index.group_of_token_[t] = static_cast<int>(g);
    }
  }
  return index;
}

int ScopeIndex::GroupAt(std::size_t token_index) const {
  return token_index < group_of_token_.size() ? group_of_token_[token_index] : -1;
}

std::vector<int> ScopeIndex::GroupsOf(std::string_view lexeme) const {
  std::vector<int> ids;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (groups_[g].lexeme == lexeme) ids.push_back(static_cast<int>(g));
  }
  return ids;
}

bool ScopeIndex::IsAncestorOrSelf(int ancestor, int region) const {
  while (region >= 0) {
    if (region == ancestor) return true;
    if (regions_[region].depth <= regions_[ancestor].depth) return false;
    region = regions_[region].parent;
  }
  return false;
}

std::string_view IdentifierCategoryName(IdentifierCategory category) {
  switch (category) {
    case IdentifierCategory::kVariable:
      return "variable";
    case IdentifierCategory::kMethod:
      return "method";
    case IdentifierCategory::kType:
      return "type";
  }
  return "variable";
}

IdentifierCategory CategorizeIdentifier(std::span<const Token> tokens,
                                        std::size_t index) {
  if (index > 0 && tokens[index - 1].lexeme == "." &&
      tokens[index - 1].kind == TokenKind::kPunctuation) {
    return IdentifierCategory::kMethod;
  }
  const std::string& lexeme = tokens[index].lexeme;
  if (!lexeme.empty() && lexeme[0] >= 'A' && lexeme[0] <= 'Z') {
    return IdentifierCategory::kType;
  }
  return IdentifierCategory::kVariable;
}

}  // namespace convlearn
