#pragma once

#include "lynbwt/types.hpp"

namespace lynbwt {

enum class EncodingMode { kRaw, kAscii, kHex };
enum class SentinelPolicy { kEscaped, kIndexed };

// How a BWT leaves the process. Escaped keeps the sentinel in-band: NUL in
// raw payloads (inputs must be NUL-free), '$' in ascii (inputs must be
// '$'-free). Indexed emits a `sentinel_row=<r>` header (1-based) and omits
// the sentinel from the payload, which then represents arbitrary bytes.
struct OutputEncoding {
  EncodingMode mode = EncodingMode::kRaw;
  SentinelPolicy sentinel = SentinelPolicy::kIndexed;
};

// Throws std::invalid_argument when the payload cannot represent the
// sequence under the chosen escape.
Bytes encode_bwt(std::span<const Sym> bwt, OutputEncoding enc);

// Inverse of encode_bwt. Throws std::invalid_argument("not a
// sentinel-terminated bwt") on an unparsable header or out-of-range row.
std::vector<Sym> decode_bwt(std::span<const Byte> data, OutputEncoding enc);

}  // namespace lynbwt
