#pragma once

#include <string>
#include <string_view>

namespace tg2p::utf8 {

// Invalid sequences decode to U+FFFD.
std::u32string decode(std::string_view s);
std::string encode(std::u32string_view s);
std::string encode(char32_t c);

}  // namespace tg2p::utf8
