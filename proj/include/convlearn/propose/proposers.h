#ifndef CONVLEARN_PROPOSE_PROPOSERS_H_
#define CONVLEARN_PROPOSE_PROPOSERS_H_

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "convlearn/lexer/format_lexer.h"
#include "convlearn/lexer/language_profile.h"
#include "convlearn/lexer/source_file.h"
#include "convlearn/ngram/vocabulary.h"
#include "convlearn/propose/candidate.h"
#include "convlearn/propose/context_index.h"

namespace convlearn {

inline constexpr std::size_t kDefaultMaxAlternatives = 500;

struct NameProposalOptions {
  std::size_t max_alternatives = kDefaultMaxAlternatives;
};

// Alternatives for the identifier at `focus` (all occurrences of one lexeme
// v): UNK plus every lexeme seen in a training window that matches one of the
// snippet's windows with v's position as the hole. Lexemes in `forbidden`
// (other names bound in the same scope) are dropped. Ordered by training
// frequency, then lexeme, capped at max_alternatives; UNK comes first.
// Throws std::invalid_argument if the focus positions hold different lexemes.
CandidateSet ProposeNames(std::span<const std::string> lexemes,
                          std::span<const WordId> ids,
                          std::span<const std::size_t> focus,
                          const ContextIndex& index, const Vocabulary& vocab,
                          const std::set<std::string, std::less<>>& forbidden = {},
                          const NameProposalOptions& options = {});

// Snippet for one identifier group: the focus occurrences and the scored
// range [first, last + n), clipped to the stream.
Snippet NameSnippet(const SourceFile& file, std::size_t group, int order);

// Identifiers other than the group's own lexeme occurring in its region.
std::set<std::string, std::less<>> NamesInScope(const SourceFile& file,
                                                std::size_t group);

// Alternatives for the whitespace token at format index `focus`: every
// lexeme of the same family (SPACE or INDENT) in `vocab`. Each candidate's
// edits are exactly the stream changes that rendering it causes: the token
// itself, shifted column buckets of the code tokens later on the same line,
// and for INDENT the compensating delta of the next INDENT so later lines
// keep their position. Candidates that cannot be rendered (negative indent,
// tokens that would fuse) are skipped. Throws std::invalid_argument if the
// focus is not whitespace.
CandidateSet ProposeFormatting(std::span<const FormatToken> tokens,
                               std::size_t focus, const Vocabulary& vocab,
                               int bucket_size, std::string_view source,
                               const LanguageProfile& profile);

// Snippet covering [min edit, max edit + n) over all candidates.
Snippet FormatSnippet(const SourceFile& file, std::size_t focus,
                      const CandidateSet& candidates, int order);

// The stream after applying `edits` to `tokens` (metadata updated from the
// new lexemes), suitable for DetokenizeFormatting.
std::vector<FormatToken> ApplyFormattingEdits(std::span<const FormatToken> tokens,
                                              std::span<const Edit> edits);

// Source text with each edited code token replaced by its new lexeme.
std::string ApplyNameEdits(const SourceFile& file, std::span<const Edit> edits);

// `lexemes` with `edits` applied.
std::vector<std::string> ApplyEdits(std::span<const std::string> lexemes,
                                    std::span<const Edit> edits);

}  // namespace convlearn

#endif  // CONVLEARN_PROPOSE_PROPOSERS_H_
