#include "convlearn/suggest/convention_model.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "convlearn/ngram/binary_io.h"

namespace convlearn {
namespace {

constexpr std::string_view kBundleMagic = "CLMF";
constexpr std::uint32_t kBundleVersion = 1;

void WriteCalibration(ByteWriter& out, const CalibrationRecord& c) {
  out.F64(c.alpha);
  out.F64(c.threshold);
  out.Str(DecisionModeName(c.mode));
  out.U64(c.seed);
  out.U64(c.samples);
  out.U64(c.eligible_spans);
  out.F64(c.grid_min);
  out.F64(c.grid_max);
  out.U32(c.grid_points);
  out.F64(c.estimated_fpr);
  out.U8(c.warning ? 1 : 0);
}

CalibrationRecord ReadCalibration(ByteReader& in) {
  CalibrationRecord c;
  c.alpha = in.F64();
  c.threshold = in.F64();
  const std::size_t mode_at = in.offset();
  try {
    c.mode = ParseDecisionMode(in.Str());
  } catch (const std::invalid_argument&) {
    throw LoadError("bad calibration mode", mode_at);
  }
  c.seed = in.U64();
  c.samples = in.U64();
  c.eligible_spans = in.U64();
  c.grid_min = in.F64();
  c.grid_max = in.F64();
  c.grid_points = in.U32();
  c.estimated_fpr = in.F64();
  c.warning = in.U8() != 0;
  return c;
}

}  // namespace

std::uint64_t HashFileList(std::vector<std::string> paths) {
  std::sort(paths.begin(), paths.end());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto feed = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (const auto& p : paths) {
    for (unsigned char c : p) feed(c);
    feed('\n');
  }
  return h;
}

ConventionModel ConventionModel::Train(std::span<const SourceFile> files,
                                       const LanguageProfile& profile,
                                       const TrainConfig& config) {
  config.Validate();
  std::vector<std::vector<std::string>> name_streams;
  std::vector<std::vector<std::string>> format_streams;
  std::vector<std::vector<bool>> holes;
  std::vector<std::string> paths;
  std::uint64_t tokens = 0;
  for (const SourceFile& f : files) {
    paths.push_back(f.path);
    name_streams.push_back(f.NameStream());
    format_streams.push_back(f.FormatStream());
    std::vector<bool> mask(f.tokens.size());
    for (std::size_t i = 0; i < f.tokens.size(); ++i) mask[i] = f.tokens[i].is_identifier();
    holes.push_back(std::move(mask));
    tokens += f.tokens.size();
  }
  if (tokens == 0) throw std::invalid_argument("empty corpus");

  ConventionModel model;
  model.config_ = config;
  model.profile_ = profile;
  model.training_hash_ = HashFileList(paths);

  Vocabulary name_vocab = Vocabulary::Build(name_streams, config.min_count);
  std::vector<std::vector<WordId>> name_ids;
  name_ids.reserve(name_streams.size());
  for (const auto& s : name_streams) name_ids.push_back(name_vocab.Encode(s));
  model.stats_.unk_tokens = name_vocab.Count(kUnkId);
  model.names_ = NGramModel::Train(name_ids, std::move(name_vocab),
                                   {config.order, config.discount_cutoff});
  model.contexts_ = ContextIndex::Build(name_ids, holes, config.order);

  Vocabulary format_vocab = Vocabulary::Build(format_streams, config.min_count);
  std::vector<std::vector<WordId>> format_ids;
  format_ids.reserve(format_streams.size());
  std::uint64_t format_tokens = 0;
  for (const auto& s : format_streams) {
    format_ids.push_back(format_vocab.Encode(s));
    format_tokens += s.size();
  }
  model.stats_.format_unk_tokens = format_vocab.Count(kUnkId);
  model.format_ = NGramModel::Train(format_ids, std::move(format_vocab),
                                    {config.format_order, config.discount_cutoff});

  model.stats_.files = files.size();
  model.stats_.tokens = tokens;
  model.stats_.format_tokens = format_tokens;
  return model;
}

SourceFile ConventionModel::Analyze(std::string path, std::string text) const {
  return SourceFile::Analyze(std::move(path), std::move(text), profile_,
                             config_.bucket_size);
}

std::string ConventionModel::Serialize() const {
  ByteWriter out;
  out.Raw(kBundleMagic);
  out.U32(kBundleVersion);
  out.U32(static_cast<std::uint32_t>(config_.order));
  out.U32(static_cast<std::uint32_t>(config_.format_order));
  out.U32(static_cast<std::uint32_t>(config_.bucket_size));
  out.U32(static_cast<std::uint32_t>(config_.min_count));
  out.U32(static_cast<std::uint32_t>(config_.discount_cutoff));
  out.Str(profile_.ToConfigText());
  out.U64(training_hash_);
  out.U64(stats_.files);
  out.U64(stats_.tokens);
  out.U64(stats_.unk_tokens);
  out.U64(stats_.format_tokens);
  out.U64(stats_.format_unk_tokens);
  names_.Write(out);
  format_.Write(out);
  contexts_.Write(out);
  out.U8(calibration_ ? 1 : 0);
  if (calibration_) WriteCalibration(out, *calibration_);
  return out.Take();
}

ConventionModel ConventionModel::Deserialize(std::string_view bytes) {
  ByteReader in(bytes);
  in.Expect(kBundleMagic, "model file");
  const std::size_t version_at = in.offset();
  const std::uint32_t version = in.U32();
  if (version != kBundleVersion) {
    throw LoadError("unsupported model file version " + std::to_string(version),
                    version_at);
  }
  ConventionModel model;
  const std::size_t config_at = in.offset();
  model.config_.order = static_cast<int>(in.U32());
  model.config_.format_order = static_cast<int>(in.U32());
  model.config_.bucket_size = static_cast<int>(in.U32());
  model.config_.min_count = static_cast<int>(in.U32());
  model.config_.discount_cutoff = static_cast<int>(in.U32());
  try {
    model.config_.Validate();
  } catch (const std::invalid_argument& e) {
    throw LoadError(std::string("bad configuration: ") + e.what(), config_at);
  }
  const std::size_t profile_at = in.offset();
  const std::string profile_text = in.Str();
  try {
    model.profile_ = LanguageProfile::Parse(profile_text);
  } catch (const std::invalid_argument& e) {
    throw LoadError(std::string("bad language profile: ") + e.what(), profile_at);
  }
  model.training_hash_ = in.U64();
  model.stats_.files = in.U64();
  model.stats_.tokens = in.U64();
  model.stats_.unk_tokens = in.U64();
  model.stats_.format_tokens = in.U64();
  model.stats_.format_unk_tokens = in.U64();
  model.names_ = NGramModel::Read(in);
  model.format_ = NGramModel::Read(in);
  model.contexts_ = ContextIndex::Read(in);
  if (model.names_.order() != model.config_.order ||
      model.format_.order() != model.config_.format_order ||
      model.contexts_.order() != model.config_.order) {
    in.Fail("model orders disagree with the configuration");
  }
  if (in.U8() != 0) model.calibration_ = ReadCalibration(in);
  if (!in.done()) in.Fail("trailing bytes after model");
  return model;
}

void ConventionModel::Save(const std::filesystem::path& path) const {
  // Written beside the target and renamed, so readers never see a partial file.
  const std::string bytes = Serialize();
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + temp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out.flush()) throw std::runtime_error("write failed: " + temp.string());
  }
  std::error_code error;
  std::filesystem::rename(temp, path, error);
  if (error) {
    std::filesystem::remove(temp, error);
    throw std::runtime_error("cannot replace " + path.string());
  }
}

ConventionModel ConventionModel::Load(const std::filesystem::path& path) {
  return Deserialize(ReadFileBytes(path));
}

}  // namespace convlearn
