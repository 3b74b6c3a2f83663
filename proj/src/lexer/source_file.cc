#include "convlearn/lexer/source_file.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "convlearn/lexer/code_lexer.h"

namespace convlearn {

std::string ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SourceFile SourceFile::Analyze(std::string path, std::string text,
                               const LanguageProfile& profile,
                               int bucket_size) {
  SourceFile file;
  file.path = std::move(path);
  file.text = std::move(text);
  LexResult lexed = LexCode(file.text, profile);
  file.format = FormatStreamFromLex(file.text, lexed, bucket_size);
  file.tokens = std::move(lexed.tokens);
  file.comments = std::move(lexed.comments);
  file.scopes = ScopeIndex::Build(file.tokens);
  return file;
}

SourceFile SourceFile::Read(const std::filesystem::path& path,
                            const LanguageProfile& profile, int bucket_size) {
  return Analyze(path.generic_string(), ReadFileBytes(path), profile,
                 bucket_size);
}

std::vector<std::string> SourceFile::NameStream() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.lexeme);
  return out;
}

std::vector<std::string> SourceFile::FormatStream() const {
  std::vector<std::string> out;
  out.reserve(format.size());
  for (const auto& t : format) out.push_back(t.Lexeme());
  return out;
}

}  // namespace convlearn
