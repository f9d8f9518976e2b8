#ifndef SFX_CLI_REPORT_HPP
#define SFX_CLI_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace sfx::cli {

using json = nlohmann::ordered_json;

/*
 * Human-readable text and a JSON object built side by side.
 * check() records into json["checks"] and drives ok().
 */
class Report {
public:
    explicit Report(bool color) : color_(color) {}

    void title(const std::string& s);
    void section(const std::string& s);
    void line(const std::string& s, int indent = 2);
    void raw(const std::string& s) { text_ += s; }
    void check(const std::string& name, bool passed, const std::vector<std::string>& witnesses = {},
               const std::string& detail = "");
    // Tagged line such as "match", "mismatch"; good selects the color.
    void tagged(const std::string& tag, bool good, const std::string& s);
    void table(const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels,
               const std::vector<std::vector<std::string>>& cells);

    json& data() { return json_; }
    const json& data() const { return json_; }
    const std::string& text() const { return text_; }
    bool ok() const { return ok_; }

private:
    std::string paint(const std::string& s, const char* code) const;

    bool color_;
    bool ok_ = true;
    std::string text_;
    json json_ = json::object();
};

}  // namespace sfx::cli

#endif
