#include "sfx/superlinalg/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace sfx {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string normalized(text);
    if (!normalized.empty() && normalized.front() == '+') normalized.erase(0, 1);
    Scalar q;
    if (q.set_str(normalized, 10) != 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& q) { return q.get_str(10); }

}  // namespace sfx
