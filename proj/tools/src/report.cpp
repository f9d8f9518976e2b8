#include "sfx/cli/report.hpp"

#include <algorithm>

namespace sfx::cli {

namespace {

// Width in code points; every label we print is narrow.
std::size_t width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
}

std::string pad_left(const std::string& s, std::size_t w) {
    const std::size_t n = width(s);
    return n >= w ? s : std::string(w - n, ' ') + s;
}

}  // namespace

std::string Report::paint(const std::string& s, const char* code) const {
    return color_ ? std::string("\x1b[") + code + "m" + s + "\x1b[0m" : s;
}

void Report::title(const std::string& s) { text_ += paint(s, "1") + "\n"; }

void Report::section(const std::string& s) { text_ += "\n" + paint(s, "1") + "\n"; }

void Report::line(const std::string& s, int indent) { text_ += std::string(static_cast<std::size_t>(indent), ' ') + s + "\n"; }

void Report::check(const std::string& name, bool passed, const std::vector<std::string>& witnesses,
                   const std::string& detail) {
    ok_ = ok_ && passed;
    text_ += "  " + (passed ? paint("PASS", "32") : paint("FAIL", "31")) + "  " + name;
    if (!detail.empty()) text_ += "  " + detail;
    text_ += "\n";
    for (const auto& w : witnesses) text_ += "        " + w + "\n";
    json entry = {{"name", name}, {"passed", passed}};
    if (!detail.empty()) entry["detail"] = detail;
    entry["witnesses"] = witnesses;
    json_["checks"].push_back(std::move(entry));
}

void Report::tagged(const std::string& tag, bool good, const std::string& s) {
    std::string t = tag;
    if (width(t) < 9) t += std::string(9 - width(t), ' ');
    text_ += "  " + paint(t, good ? "32" : "33") + s + "\n";
}

void Report::table(const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels,
                   const std::vector<std::vector<std::string>>& cells) {
    std::size_t w0 = 0;
    for (const auto& r : row_labels) w0 = std::max(w0, width(r));
    std::vector<std::size_t> w(col_labels.size());
    for (std::size_t c = 0; c < col_labels.size(); ++c) {
        w[c] = width(col_labels[c]);
        for (const auto& row : cells) w[c] = std::max(w[c], width(row.at(c)));
    }
    std::string head = "  " + std::string(w0, ' ');
    for (std::size_t c = 0; c < col_labels.size(); ++c) head += "  " + pad_left(col_labels[c], w[c]);
    text_ += head + "\n";
    for (std::size_t r = 0; r < row_labels.size(); ++r) {
        std::string s = "  " + row_labels[r] + std::string(w0 - width(row_labels[r]), ' ');
        for (std::size_t c = 0; c < col_labels.size(); ++c) s += "  " + pad_left(cells[r][c], w[c]);
        text_ += s + "\n";
    }
}

}  // namespace sfx::cli
