#ifndef CONVLEARN_NGRAM_BINARY_IO_H_
#define CONVLEARN_NGRAM_BINARY_IO_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace convlearn {

// A model file could not be read. `offset` is the byte position where
// decoding failed.
class LoadError : public std::runtime_error {
 public:
  LoadError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Fixed little-endian encoding, independent of the host.
class ByteWriter {
 public:
  void U8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void U32(std::uint32_t v);
  void U64(std::uint64_t v);
  void I64(std::int64_t v) { U64(static_cast<std::uint64_t>(v)); }
  void F64(double v);
  void Str(std::string_view s);
  void Raw(std::string_view s) { out_.append(s); }

  const std::string& bytes() const { return out_; }
  std::string Take() { return std::move(out_); }

 private:
  std::string out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::string_view data) : data_(data) {}

  std::uint8_t U8();
  std::uint32_t U32();
  std::uint64_t U64();
  std::int64_t I64() { return static_cast<std::int64_t>(U64()); }
  double F64();
  std::string Str();
  // Reads exactly `magic` or throws.
  void Expect(std::string_view magic, const char* what);

  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return pos_ == data_.size(); }
  [[noreturn]] void Fail(const std::string& what) const {
    throw LoadError(what, pos_);
  }

 private:
  void Need(std::size_t n) const;

  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace convlearn

#endif  // CONVLEARN_NGRAM_BINARY_IO_H_
