#include "convlearn/ngram/binary_io.h"

#include <bit>
#include <cstring>

namespace convlearn {

void ByteWriter::U32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) U8(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::U64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) U8(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::F64(double v) { U64(std::bit_cast<std::uint64_t>(v)); }

void ByteWriter::Str(std::string_view s) {
  U32(static_cast<std::uint32_t>(s.size()));
  out_.append(s);
}

void ByteReader::Need(std::size_t n) const {
  if (remaining() < n) {
    throw LoadError("truncated: need " + std::to_string(n) + " bytes, have " +
                        std::to_string(remaining()),
                    pos_);
  }
}

std::uint8_t ByteReader::U8() {
  Need(1);
  return static_cast<std::uint8_t>(data_[pos_++]);
}

std::uint32_t ByteReader::U32() {
  Need(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(data_[pos_ + i]))
         << (8 * i);
  }
  pos_ += 4;
  return v;
}

std::uint64_t ByteReader::U64() {
  Need(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(data_[pos_ + i]))
         << (8 * i);
  }
  pos_ += 8;
  return v;
}

double ByteReader::F64() { return std::bit_cast<double>(U64()); }

std::string ByteReader::Str() {
  const std::size_t at = pos_;
  const std::uint32_t n = U32();
  if (remaining() < n) {
    throw LoadError("truncated string of length " + std::to_string(n), at);
  }
  std::string s(data_.substr(pos_, n));
  pos_ += n;
  return s;
}

void ByteReader::Expect(std::string_view magic, const char* what) {
  Need(magic.size());
  if (data_.substr(pos_, magic.size()) != magic) {
    Fail(std::string("bad ") + what + " magic");
  }
  pos_ += magic.size();
}

}  // namespace convlearn
