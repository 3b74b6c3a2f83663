#include "convlearn/cli/corpus.h"

#include <fnmatch.h>

#include <algorithm>
#include <system_error>

namespace convlearn {
namespace {

namespace fs = std::filesystem;

bool MatchesAny(const std::vector<std::string>& patterns, const std::string& path) {
  return std::any_of(patterns.begin(), patterns.end(), [&](const std::string& p) {
    return fnmatch(p.c_str(), path.c_str(), 0) == 0;
  });
}

fs::path Normalize(const fs::path& p) {
  std::error_code ec;
  const fs::path canonical = fs::weakly_canonical(p, ec);
  return ec ? p.lexically_normal() : canonical;
}

}  // namespace

std::vector<fs::path> ResolveCorpus(const CorpusSpec& spec,
                                    std::vector<std::string>* warnings) {
  const auto warn = [&](std::string message) {
    if (warnings) warnings->push_back(std::move(message));
  };
  std::vector<fs::path> held;
  for (const auto& h : spec.holdouts) held.push_back(Normalize(h));
  const auto held_out = [&](const fs::path& p) {
    return std::find(held.begin(), held.end(), Normalize(p)) != held.end();
  };
  const auto size_ok = [&](const fs::path& p) {
    std::error_code ec;
    const auto size = fs::file_size(p, ec);
    if (ec) {
      warn("skipping " + p.string() + ": " + ec.message());
      return false;
    }
    if (size > spec.max_file_bytes) {
      warn("skipping " + p.string() + ": larger than " +
           std::to_string(spec.max_file_bytes) + " bytes");
      return false;
    }
    return true;
  };

  std::vector<fs::path> out;
  for (const auto& root : spec.roots) {
    std::error_code ec;
    if (fs::is_regular_file(root, ec)) {
      if (!held_out(root) && size_ok(root)) out.push_back(root.lexically_normal());
      continue;
    }
    if (!fs::is_directory(root, ec)) {
      warn("skipping " + root.string() + ": not a file or directory");
      continue;
    }
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    for (; !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
      if (!it->is_regular_file(ec)) continue;
      const fs::path& p = it->path();
      if (!spec.extensions.empty() &&
          std::find(spec.extensions.begin(), spec.extensions.end(),
                    p.extension().string()) == spec.extensions.end()) {
        continue;
      }
      const std::string relative = p.lexically_relative(root).generic_string();
      if (!spec.include.empty() && !MatchesAny(spec.include, relative)) continue;
      if (MatchesAny(spec.exclude, relative)) continue;
      if (held_out(p) || !size_ok(p)) continue;
      out.push_back(p.lexically_normal());
    }
    if (ec) warn("error walking " + root.string() + ": " + ec.message());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SourceFile> LoadCorpus(const std::vector<fs::path>& paths,
                                   const LanguageProfile& profile, int bucket_size,
                                   std::vector<std::string>* warnings) {
  std::vector<SourceFile> files;
  files.reserve(paths.size());
  for (const auto& p : paths) {
    try {
      files.push_back(SourceFile::Read(p, profile, bucket_size));
    } catch (const std::exception& e) {
      if (warnings) warnings->push_back("skipping " + p.string() + ": " + e.what());
    }
  }
  return files;
}

}  // namespace convlearn
