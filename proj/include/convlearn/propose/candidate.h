#ifndef CONVLEARN_PROPOSE_CANDIDATE_H_
#define CONVLEARN_PROPOSE_CANDIDATE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "convlearn/lexer/token.h"

namespace convlearn {

// Replace the stream token at `position` by `lexeme`.
struct Edit {
  std::size_t position = 0;
  std::string lexeme;

  friend bool operator==(const Edit&, const Edit&) = default;
};

// A contiguous piece of a token stream under evaluation. Positions index the
// file's naming stream or formatting stream.
struct Snippet {
  std::string origin;
  ByteSpan bytes;
  std::vector<std::size_t> focus;
  // Scored range [begin, end) of the stream; history comes from the file.
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - begin; }
};

struct Candidate {
  // Proposed name or whitespace lexeme.
  std::string lexeme;
  bool is_unk = false;
  // The candidate is the snippet's current lexeme.
  bool keeps_original = false;
  // Training frequency, used for tie-breaking.
  std::uint64_t frequency = 0;
  std::vector<Edit> edits;
};

struct CandidateSet {
  std::string original;
  std::vector<Candidate> candidates;
};

}  // namespace convlearn

#endif  // CONVLEARN_PROPOSE_CANDIDATE_H_
