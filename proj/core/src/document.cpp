#include "sfx/io/document.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sfx/errors.hpp"
#include "sfx/io/corpus.hpp"
#include "sfx/superlinalg/format.hpp"

namespace sfx {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kAlgebraFormat = "sfx-algebra";
constexpr const char* kExtensionFormat = "sfx-extension";

json parse_json(std::string_view text) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) throw ParseError("empty document", 1, 1);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // byte is 1-based and points one past the offending character.
        std::size_t line = 1, col = 1;
        const std::size_t stop = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line, col = 1;
            } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
                ++col;
            }
        }
        std::string what = e.what();
        if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what, line, col);
    }
}

bool is_leaf_container(const json& j) {
    for (const auto& v : j)
        if (v.is_structured()) return false;
    return true;
}

// Containers of scalars stay on one line; everything else is indented.
void emit(const json& j, int indent, std::string& out) {
    auto key = [](const std::string& k) { return json(k).dump() + ": "; };
    if (!j.is_structured()) {
        out += j.dump();
        return;
    }
    const bool obj = j.is_object();
    if (j.empty()) {
        out += obj ? "{}" : "[]";
        return;
    }
    if (is_leaf_container(j)) {
        out += obj ? "{" : "[";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ", ";
            first = false;
            if (obj) out += key(it.key());
            out += it->dump();
        }
        out += obj ? "}" : "]";
        return;
    }
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    out += obj ? "{\n" : "[\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        if (obj) out += key(it.key());
        emit(*it, indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + (obj ? "}" : "]");
}

std::string render(const json& j) {
    std::string out;
    emit(j, 0, out);
    return out + "\n";
}

[[noreturn]] void schema(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) schema(where, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string string_field(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_string()) schema(where + "." + key, "expected a string");
    return v.get<std::string>();
}

std::string optional_string(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) return "";
    return string_field(j, key, where);
}

// Runs an interpreter, prefixing parse errors with the document location.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what(), e.line(), e.column());
    } catch (const PreconditionError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

void check_header(const json& j, const char* format) {
    if (!j.is_object()) schema("document", "expected a JSON object");
    const std::string f = string_field(j, "format", "document");
    if (f != format) schema("format", "expected \"" + std::string(format) + "\", got \"" + f + "\"");
    const json& v = field(j, "version", "document");
    if (!v.is_number_integer() || v.get<int>() != kDocumentVersion)
        schema("version", "unsupported schema version (expected " + std::to_string(kDocumentVersion) + ")");
}

Parity parse_parity(const json& j, const std::string& where) {
    if (!j.is_string()) schema(where, "expected \"even\" or \"odd\"");
    const std::string s = j.get<std::string>();
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    schema(where, "expected \"even\" or \"odd\", got \"" + s + "\"");
}

std::vector<BasisVector> parse_basis(const json& j, const std::string& where) {
    if (!j.is_array()) schema(where, "expected an array");
    std::vector<BasisVector> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string w = where + "[" + std::to_string(k) + "]";
        const std::string label = string_field(j[k], "label", w);
        if (label.empty()) schema(w, "empty label");
        out.push_back({label, parse_parity(field(j[k], "parity", w), w + ".parity")});
    }
    return out;
}

CanonicalSpace canonical(const std::vector<BasisVector>& declared, const std::string& where) {
    try {
        return canonicalize(declared);
    } catch (const std::exception& e) {
        schema(where, e.what());
    }
}

json basis_json(const SuperSpace& s) {
    json out = json::array();
    for (const auto& b : s.basis()) out.push_back({{"label", b.label}, {"parity", to_string(b.parity)}});
    return out;
}

json algebra_json(const LieSuperAlgebra& alg, const std::optional<SuperForm>& form, const std::string& name,
                  const std::string& source) {
    const auto& s = alg.space();
    json j;
    j["format"] = kAlgebraFormat;
    j["version"] = kDocumentVersion;
    if (!name.empty()) j["name"] = name;
    if (!source.empty()) j["source"] = source;
    j["basis"] = basis_json(s);
    json br = json::array();
    for (std::size_t x = 0; x < s.dim(); ++x)
        for (std::size_t y = x; y < s.dim(); ++y) {
            Vector v = alg.bracket_basis(x, y);
            if (!is_zero(v)) br.push_back({s.label(x), s.label(y), format_combination(s, v)});
        }
    j["brackets"] = br;
    if (form) j["form"] = {{"parity", to_string(form->parity())}, {"wedge", format_two_form(s, form->gram())}};
    return j;
}

AlgebraDocument algebra_from_json(const json& j) {
    check_header(j, kAlgebraFormat);
    AlgebraDocument doc;
    doc.name = optional_string(j, "name", "document");
    doc.source = optional_string(j, "source", "document");
    doc.declared = parse_basis(field(j, "basis", "document"), "basis");
    doc.canon = canonical(doc.declared, "basis");
    const SuperSpace& s = doc.canon.space;

    std::vector<std::tuple<std::size_t, std::size_t, Vector>> brackets;
    if (j.contains("brackets")) {
        const json& br = j.at("brackets");
        if (!br.is_array()) schema("brackets", "expected an array");
        for (std::size_t k = 0; k < br.size(); ++k) {
            const std::string w = "brackets[" + std::to_string(k) + "]";
            const json& t = br[k];
            if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() || !t[2].is_string())
                schema(w, "expected [left, right, value] strings");
            auto idx = [&](const json& lab) {
                auto i = s.find(lab.get<std::string>());
                if (!i) schema(w, "undeclared label '" + lab.get<std::string>() + "'");
                return *i;
            };
            const std::size_t x = idx(t[0]), y = idx(t[1]);
            Vector v = located(w, [&] { return parse_vector(s, t[2].get<std::string>()); });
            brackets.emplace_back(x, y, std::move(v));
        }
    }
    try {
        doc.algebra = LieSuperAlgebra::from_brackets(s, brackets);
    } catch (const PreconditionError& e) {
        throw ValidationError(std::string("inconsistent bracket relations: ") + e.what());
    }

    if (j.contains("form")) {
        const json& f = j.at("form");
        const Parity p = parse_parity(field(f, "parity", "form"), "form.parity");
        Matrix gram;
        if (f.contains("wedge")) {
            const std::string text = string_field(f, "wedge", "form");
            gram = located("form.wedge", [&] { return parse_two_form(s, text); });
        } else if (f.contains("gram")) {
            const json& g = f.at("gram");
            if (!g.is_array() || g.size() != s.dim()) schema("form.gram", "expected a square matrix of the basis size");
            gram = Matrix(s.dim(), s.dim());
            // Rows and columns follow the declared order.
            std::vector<std::size_t> pos(s.dim());
            for (std::size_t n = 0; n < s.dim(); ++n) pos[doc.canon.order[n]] = n;
            for (std::size_t r = 0; r < s.dim(); ++r) {
                if (!g[r].is_array() || g[r].size() != s.dim()) schema("form.gram", "expected a square matrix");
                for (std::size_t c = 0; c < s.dim(); ++c) {
                    const json& e = g[r][c];
                    std::string text = e.is_string() ? e.get<std::string>() : e.is_number_integer() ? e.dump() : "";
                    if (text.empty()) schema("form.gram", "entries must be integers or rational strings");
                    gram(pos[r], pos[c]) = located("form.gram", [&] {
                        try {
                            return parse_scalar(text);
                        } catch (const std::invalid_argument& ex) {
                            throw ParseError(ex.what());
                        }
                    });
                }
            }
        } else {
            schema("form", "expected \"wedge\" or \"gram\"");
        }
        doc.form = SuperForm(s, std::move(gram), p);
    }
    return doc;
}

}  // namespace

QuasiFrobenius AlgebraDocument::quasi_frobenius() const {
    if (!form) throw PreconditionError("the document has no form");
    return {algebra, *form};
}

AlgebraDocument read_algebra_document(std::string_view text) { return algebra_from_json(parse_json(text)); }

std::string write_algebra_document(const LieSuperAlgebra& alg, const std::optional<SuperForm>& form,
                                   const std::string& name, const std::string& source) {
    return render(algebra_json(alg, form, name, source));
}

std::string write_algebra_document(const AlgebraDocument& doc) {
    return write_algebra_document(doc.algebra, doc.form, doc.name, doc.source);
}

DocumentLoader make_loader(const std::filesystem::path& dir) {
    return [dir](const std::string& ref) -> std::string {
        const std::filesystem::path p = dir / ref;
        if (std::filesystem::is_regular_file(p)) {
            std::ifstream in(p, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
        if (const CorpusEntry* e = find_corpus(ref)) return std::string(e->text);
        throw ParseError("base document '" + ref + "' not found");
    };
}

DocumentKind document_kind(std::string_view text) {
    json j = parse_json(text);
    const std::string f = j.is_object() ? optional_string(j, "format", "document") : "";
    if (f == kAlgebraFormat) return DocumentKind::Algebra;
    if (f == kExtensionFormat) return DocumentKind::Extension;
    schema("format", "expected \"" + std::string(kAlgebraFormat) + "\" or \"" + kExtensionFormat + "\"");
}

ExtensionDocument read_extension_document(std::string_view text, const DocumentLoader& load) {
    json j = parse_json(text);
    check_header(j, kExtensionFormat);
    ExtensionDocument doc;
    doc.name = optional_string(j, "name", "document");
    const std::string model = string_field(j, "model", "document");
    if (model == "orthosymplectic")
        doc.model = ModelKind::Orthosymplectic;
    else if (model == "periplectic")
        doc.model = ModelKind::Periplectic;
    else
        schema("model", "expected \"orthosymplectic\" or \"periplectic\"");

    const json& base = field(j, "base", "document");
    if (base.is_string()) {
        doc.base_ref = base.get<std::string>();
        const std::string base_text = load(doc.base_ref);
        doc.base = located("base '" + doc.base_ref + "'", [&] { return read_algebra_document(base_text); });
    } else {
        doc.base = located("base", [&] { return algebra_from_json(base); });
    }
    if (!doc.base.form) schema("base", "the base algebra needs a form");
    const SuperSpace& as = doc.base.canon.space;

    doc.l_declared = parse_basis(field(j, "l", "document"), "l");
    doc.l_canon = canonical(doc.l_declared, "l");
    const SuperSpace& l = doc.l_canon.space;
    doc.input = ExtensionInput::zero(doc.base.quasi_frobenius(), l);

    if (j.contains("xi")) {
        const json& xi = j.at("xi");
        if (!xi.is_object()) schema("xi", "expected an object keyed by l labels");
        for (const auto& [key, value] : xi.items()) {
            auto m = l.find(key);
            if (!m) schema("xi", "undeclared label '" + key + "'");
            if (!value.is_string()) schema("xi." + key, "expected a string");
            doc.input.xi[*m] =
                located("xi." + key, [&] { return parse_endomorphism(doc.base.algebra, value.get<std::string>()); });
        }
    }
    if (j.contains("gamma")) {
        const std::string g = string_field(j, "gamma", "document");
        doc.input.gamma = located("gamma", [&] { return parse_gamma(as, l, g); });
    }
    if (j.contains("epsilon")) {
        const std::string e = string_field(j, "epsilon", "document");
        SuperSpace ldual = make_extension(ExtensionInput::zero(doc.base.quasi_frobenius(), l)).l_dual;
        doc.input.epsilon = located("epsilon", [&] { return parse_two_cochain(l, ldual, e); });
    }
    if (j.contains("reference")) {
        const json& r = j.at("reference");
        doc.reference.beta = optional_string(r, "beta", "reference");
        doc.reference.alpha = optional_string(r, "alpha", "reference");
        if (r.contains("brackets")) {
            const json& br = r.at("brackets");
            if (!br.is_array()) schema("reference.brackets", "expected an array");
            for (std::size_t k = 0; k < br.size(); ++k) {
                const json& t = br[k];
                if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() || !t[2].is_string())
                    schema("reference.brackets[" + std::to_string(k) + "]", "expected [left, right, value] strings");
                doc.reference.brackets.push_back(
                    {t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
            }
        }
    }
    return doc;
}

std::string write_extension_document(const ExtensionData& ext, const std::string& name, const std::string& base_ref,
                                     const ExtensionDocument::Reference& reference) {
    const auto& as = ext.a->space();
    const auto& l = ext.input.l;
    json j;
    j["format"] = kExtensionFormat;
    j["version"] = kDocumentVersion;
    if (!name.empty()) j["name"] = name;
    j["model"] = to_string(ext.kind);
    if (base_ref.empty())
        j["base"] = algebra_json(ext.input.base.algebra, ext.input.base.form, "", "");
    else
        j["base"] = base_ref;
    j["l"] = basis_json(l);
    json xi = json::object();
    for (std::size_t m = 0; m < l.dim(); ++m) xi[l.label(m)] = format_endomorphism(as, ext.input.xi[m]);
    j["xi"] = xi;
    j["gamma"] = format_gamma(as, l, ext.input.gamma);
    j["epsilon"] = format_two_cochain(l, ext.l_dual, ext.input.epsilon, TensorOp::Wedge);
    if (!reference.empty()) {
        json r = json::object();
        if (!reference.beta.empty()) r["beta"] = reference.beta;
        if (!reference.alpha.empty()) r["alpha"] = reference.alpha;
        if (!reference.brackets.empty()) {
            json br = json::array();
            for (const auto& t : reference.brackets) br.push_back({t[0], t[1], t[2]});
            r["brackets"] = br;
        }
        j["reference"] = r;
    }
    return render(j);
}

std::vector<ReferenceLine> reference_lines(const ExtensionDocument::Reference& ref, const SuperSpace& d) {
    std::vector<ReferenceLine> out;
    for (std::size_t k = 0; k < ref.brackets.size(); ++k) {
        const auto& [left, right, value] = ref.brackets[k];
        const std::string where = "reference.brackets[" + std::to_string(k) + "]";
        auto idx = [&](const std::string& lab) {
            auto i = d.find(lab);
            if (!i) throw ParseError(where + ": unknown label '" + lab + "'");
            return *i;
        };
        ReferenceLine line{"[" + left + "," + right + "] = " + value, idx(left), idx(right), {}};
        line.value = located(where, [&] { return parse_vector(d, value); });
        out.push_back(std::move(line));
    }
    return out;
}

}  // namespace sfx
