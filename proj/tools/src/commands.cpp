#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sfx/io.hpp"

namespace sfx::cli {

namespace {

constexpr std::size_t kMaxWitnesses = 8;

struct Source {
    std::string text;
    std::filesystem::path dir;
    std::string name;
};

// A path on disk, or else the name of a bundled corpus document.
Source read_source(const std::string& file) {
    std::filesystem::path p(file);
    std::error_code ec;
    if (std::filesystem::is_regular_file(p, ec)) {
        std::ifstream in(p, std::ios::binary);
        if (!in) throw PreconditionError("cannot read '" + file + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return {ss.str(), p.has_parent_path() ? p.parent_path() : std::filesystem::path("."), p.filename().string()};
    }
    if (const auto* e = find_corpus(file)) return {std::string(e->text), ".", std::string(e->name)};
    throw PreconditionError("cannot read '" + file + "': no such file or corpus entry");
}

std::vector<std::string> capped(std::vector<std::string> w) {
    if (w.size() > kMaxWitnesses) {
        const std::size_t more = w.size() - kMaxWitnesses;
        w.resize(kMaxWitnesses);
        w.push_back("... and " + std::to_string(more) + " more");
    }
    return w;
}

std::string tuple_text(const SuperSpace& s, const std::vector<std::size_t>& idx) {
    std::string t = "(";
    for (std::size_t k = 0; k < idx.size(); ++k) t += (k ? "," : "") + s.label(idx[k]);
    return t + ")";
}

std::string space_text(const SuperSpace& s) {
    return std::to_string(s.dim()) + " (" + std::to_string(s.even_dim()) + "|" + std::to_string(s.odd_dim()) + ")";
}

void algebra_checks(Report& r, const LieSuperAlgebra& alg, const std::optional<SuperForm>& form,
                    const std::string& prefix) {
    const auto& s = alg.space();
    const ValidationReport v = validate(alg);
    for (auto kind : {AxiomViolation::Kind::Grading, AxiomViolation::Kind::Antisymmetry, AxiomViolation::Kind::Jacobi}) {
        std::vector<std::string> w;
        for (const auto& x : v.violations)
            if (x.kind == kind) w.push_back(tuple_text(s, x.indices) + ": " + format_combination(s, x.residual));
        const bool ok = w.empty();
        r.check(prefix + to_string(kind), ok, capped(std::move(w)));
    }
    if (!form) return;
    const auto issues = form_issues(*form);
    for (auto kind : {FormIssue::Kind::Homogeneity, FormIssue::Kind::Antisymmetry}) {
        std::vector<std::string> w;
        for (const auto& x : issues)
            if (x.kind == kind) w.push_back(tuple_text(s, {x.i, x.j}));
        const bool ok = w.empty();
        r.check(prefix + "form " + to_string(kind), ok, capped(std::move(w)),
                std::string("(") + to_string(form->parity()) + " form)");
    }
    r.check(prefix + "nondegenerate", is_nondegenerate(*form));
    std::vector<std::string> w;
    for (const auto& c : closedness_failures(alg, *form))
        w.push_back(tuple_text(s, {c.a, c.b, c.c}) + ": " + to_string(c.residual));
    const bool closed = w.empty();
    r.check(prefix + "closed", closed, capped(std::move(w)));
}

json bracket_json(const LieSuperAlgebra& alg) {
    const auto& s = alg.space();
    json out = json::array();
    for (std::size_t x = 0; x < s.dim(); ++x)
        for (std::size_t y = x; y < s.dim(); ++y)
            if (Vector v = alg.bracket_basis(x, y); !is_zero(v))
                out.push_back({s.label(x), s.label(y), format_combination(s, v)});
    return out;
}

// Nonzero brackets in (left, right) basis order, then the form.
void describe(Report& r, const QuasiFrobenius& qf, const std::string& key) {
    const auto& s = qf.algebra.space();
    json br = bracket_json(qf.algebra);
    r.line("basis: " + space_text(s));
    r.line("brackets:");
    if (br.empty()) r.line("(abelian)", 4);
    for (const auto& b : br)
        r.line("[" + b[0].get<std::string>() + "," + b[1].get<std::string>() + "] = " + b[2].get<std::string>(), 4);
    const std::string form = format_two_form(s, qf.form.gram());
    r.line(std::string("form (") + to_string(qf.form.parity()) + "): " + form);
    r.data()[key] = {{"dim", s.dim()}, {"brackets", br}, {"form", form}, {"form_parity", to_string(qf.form.parity())}};
}

std::vector<Scalar> cochain_flat(const Cochain& c) {
    const std::size_t n = c.source().dim(), w = c.coefficients().dim();
    std::vector<Scalar> flat(n * n * w);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < w; ++k) flat[(i * n + j) * w + k] = c.at({i, j}, k);
    return flat;
}

std::string beta_text(const ExtensionData& ext) {
    return format_two_cochain(ext.a->space(), ext.l_dual, cochain_flat(ext.beta));
}

std::string alpha_text(const ExtensionData& ext) {
    return format_two_cochain(ext.input.l, ext.a->space(), cochain_flat(ext.alpha));
}

// xi, gamma, eps in document notation.
void describe_data(Report& r, const ExtensionData& ext, const std::string& key) {
    const auto& as = ext.a->space();
    const auto& l = ext.input.l;
    json j;
    r.line("l: " + space_text(l) + ", model " + to_string(ext.kind));
    for (std::size_t m = 0; m < l.dim(); ++m) {
        const std::string x = format_endomorphism(as, ext.input.xi[m]);
        r.line("xi(" + l.label(m) + ") = " + x);
        j["xi"][l.label(m)] = x;
    }
    j["gamma"] = format_gamma(as, l, ext.input.gamma);
    j["epsilon"] = format_two_cochain(l, ext.l_dual, ext.input.epsilon, TensorOp::Wedge);
    j["beta"] = beta_text(ext);
    j["alpha"] = alpha_text(ext);
    r.line("gamma = " + j["gamma"].get<std::string>());
    r.line("epsilon = " + j["epsilon"].get<std::string>());
    r.line("beta = " + j["beta"].get<std::string>() + "  (derived)");
    r.line("alpha = " + j["alpha"].get<std::string>() + "  (derived)");
    r.data()[key] = std::move(j);
}

void condition_checks(Report& r, const ExtensionData& ext) {
    const std::vector<std::string> parity = parity_issues(ext);
    r.check("parity", parity.empty(), capped(parity), "(the assembled bracket is even)");
    for (const auto& c : check_conditions(ext).results) r.check(c.name, c.passed, capped(c.witnesses), c.equation);
}

void emit_document(Report& r, const std::string& out, const std::string& text) {
    r.data()["document"] = json::parse(text);
    if (out.empty()) {
        r.section("document");
        r.raw(text);
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f || !(f << text)) throw PreconditionError("cannot write '" + out + "'");
    r.line("wrote " + out, 0);
    r.data()["written"] = out;
}

struct Target {
    std::string name;
    QuasiFrobenius qf;
};

// An algebra document with a form, or an extension document (built first).
Target load_target(const Source& src, Report& r) {
    if (document_kind(src.text) == DocumentKind::Extension) {
        auto doc = read_extension_document(src.text, make_loader(src.dir));
        StandardModel m = build(make_extension(doc.input));
        r.line("built the " + std::string(to_string(m.kind())) + " model of " + doc.name, 0);
        return {doc.name, m.qf};
    }
    auto doc = read_algebra_document(src.text);
    if (!doc.form) throw PreconditionError(src.name + " has no form");
    return {doc.name, doc.quasi_frobenius()};
}

Subspace ideal_from_labels(const SuperSpace& s, const std::vector<std::string>& labels) {
    if (labels.empty()) throw PreconditionError("--ideal needs at least one label");
    std::vector<std::size_t> idx;
    for (const auto& lab : labels) {
        auto i = s.find(lab);
        if (!i) throw PreconditionError("unknown label '" + lab + "' in --ideal");
        idx.push_back(*i);
    }
    return Subspace::coordinate(s, idx);
}

std::string span_text(const Subspace& j) {
    std::string t = "span(";
    for (std::size_t k = 0; k < j.dim(); ++k) t += (k ? ", " : "") + format_combination(j.ambient(), j.vector(k));
    return t + ")";
}

void matrix_table(Report& r, const SuperSpace& rows, const SuperSpace& cols, const Matrix& m, const std::string& key) {
    std::vector<std::vector<std::string>> cells(rows.dim());
    json jm = json::array();
    for (std::size_t i = 0; i < rows.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < cols.dim(); ++j) {
            cells[i].push_back(m(i, j) == 0 ? "." : to_string(m(i, j)));
            row.push_back(to_string(m(i, j)));
        }
        jm.push_back(std::move(row));
    }
    r.table(rows.labels(), cols.labels(), cells);
    r.data()[key] = {{"rows", rows.labels()}, {"columns", cols.labels()}, {"entries", jm}};
}

}  // namespace

int cmd_validate(const std::string& file, Report& r) {
    const Source src = read_source(file);
    r.data()["command"] = "validate";
    r.data()["file"] = src.name;
    if (document_kind(src.text) == DocumentKind::Algebra) {
        auto doc = read_algebra_document(src.text);
        r.data()["kind"] = "algebra";
        r.title("validate " + src.name + (doc.name.empty() ? "" : ": " + doc.name));
        if (doc.canon.reordered) r.line("note: basis reordered to put even vectors first", 0);
        algebra_checks(r, doc.algebra, doc.form, "");
    } else {
        auto doc = read_extension_document(src.text, make_loader(src.dir));
        r.data()["kind"] = "extension";
        r.title("validate " + src.name + (doc.name.empty() ? "" : ": " + doc.name));
        r.section("base");
        algebra_checks(r, doc.input.base.algebra, doc.input.base.form, "base ");
        if (r.ok()) {
            ExtensionData ext = make_extension(doc.input);
            r.section("conditions");
            condition_checks(r, ext);
            r.section("assembled model");
            StandardModel m = force_build(ext);
            algebra_checks(r, m.qf.algebra, m.qf.form, "model ");
        }
    }
    r.data()["ok"] = r.ok();
    return r.ok() ? 0 : 1;
}

int cmd_extend(const std::string& file, const std::string& out, bool force, Report& r) {
    const Source src = read_source(file);
    auto doc = read_extension_document(src.text, make_loader(src.dir));
    r.data()["command"] = "extend";
    r.data()["file"] = src.name;
    r.data()["name"] = doc.name;
    r.title("extend " + src.name + (doc.name.empty() ? "" : ": " + doc.name));

    r.section("base");
    algebra_checks(r, doc.input.base.algebra, doc.input.base.form, "base ");
    if (!r.ok()) {
        r.line("the base is not quasi-Frobenius; nothing built", 0);
        return 1;
    }
    ExtensionData ext = make_extension(doc.input);
    r.section("conditions");
    condition_checks(r, ext);

    r.section("extension data");
    describe_data(r, ext, "data");
    const auto& ref = doc.reference;
    json refj = json::object();
    if (!ref.beta.empty()) {
        const bool same = parse_two_cochain(ext.a->space(), ext.l_dual, ref.beta) == cochain_flat(ext.beta);
        r.tagged(same ? "match" : "mismatch", same, "reference beta = " + ref.beta);
        refj["beta"] = same;
    }
    if (!ref.alpha.empty()) {
        const bool same = parse_two_cochain(ext.input.l, ext.a->space(), ref.alpha) == cochain_flat(ext.alpha);
        r.tagged(same ? "match" : "mismatch", same, "reference alpha = " + ref.alpha);
        refj["alpha"] = same;
    }

    const bool valid = r.ok();
    if (!valid && !force) {
        r.line("", 0);
        r.line("not building: the conditions above fail (use --force to assemble anyway)", 0);
        r.data()["ok"] = false;
        return 1;
    }
    StandardModel m = valid ? build(ext) : force_build(ext);
    r.section(std::string(to_string(m.kind())) + " model" + (valid ? "" : " (forced)"));
    describe(r, m.qf, "model");
    algebra_checks(r, m.qf.algebra, m.qf.form, "model ");
    if (auto c = nilpotency_class(m.qf.algebra)) {
        r.line("nilpotency class " + std::to_string(*c));
        r.data()["nilpotency_class"] = *c;
    }

    if (!ref.brackets.empty()) {
        r.section("reference table");
        const auto cmp = compare_table(m.qf.algebra, reference_lines(ref, m.qf.algebra.space()));
        json lines = json::array();
        for (const auto& v : cmp.lines) {
            const bool good = v.status == LineVerdict::Status::Match;
            std::string s = v.text;
            if (!good) s += "   computed: " + v.computed;
            if (v.status == LineVerdict::Status::Conflict) s += "   (the table assigns this bracket twice)";
            r.tagged(to_string(v.status), good, s);
            lines.push_back({{"line", v.text}, {"computed", v.computed}, {"status", to_string(v.status)}});
        }
        r.line(std::to_string(cmp.count(LineVerdict::Status::Match)) + " of " + std::to_string(cmp.lines.size()) +
               " printed lines match");
        refj["brackets"] = lines;
    }
    if (!refj.empty()) r.data()["reference"] = refj;
    emit_document(r, out, write_algebra_document(m.qf.algebra, m.qf.form, doc.name, "sfx extend " + src.name));
    r.data()["ok"] = r.ok();
    return r.ok() ? 0 : 1;
}

int cmd_reduce(const std::string& file, const std::vector<std::string>& ideal, bool balanced, const std::string& out,
               Report& r) {
    const Source src = read_source(file);
    r.data()["command"] = "reduce";
    r.data()["file"] = src.name;
    r.title("reduce " + src.name);
    Target t = load_target(src, r);
    r.section("input");
    algebra_checks(r, t.qf.algebra, t.qf.form, "");
    if (!r.ok()) return 1;

    const Subspace j = balanced ? balanced_ideal(t.qf) : ideal_from_labels(t.qf.algebra.space(), ideal);
    const IdealClassification c = classify_ideal(t.qf, j);
    r.section("ideal");
    r.line(std::string(balanced ? "z meet z-perp = " : "j = ") + span_text(j));
    std::string labels;
    for (const auto& l : c.labels()) labels += (labels.empty() ? "" : ", ") + l;
    r.line("classification: " + labels);
    r.data()["ideal"] = span_text(j);
    r.data()["classification"] = c.labels();

    const Reduction red = reduce(t.qf, j);
    const std::size_t n = t.qf.algebra.dim();
    r.line("dim g = " + std::to_string(n) + ", dim j = " + std::to_string(j.dim()) + ", dim j-perp = " +
           std::to_string(red.perp.dim()) + ", dim j-perp/j = " + std::to_string(red.reduced.algebra.dim()));
    r.data()["dims"] = {{"g", n}, {"j", j.dim()}, {"perp", red.perp.dim()}, {"reduced", red.reduced.algebra.dim()}};

    r.section("j-perp / j");
    describe(r, red.reduced, "reduced");
    algebra_checks(r, red.reduced.algebra, red.reduced.form, "reduced ");
    emit_document(r, out,
                  write_algebra_document(red.reduced.algebra, red.reduced.form, t.name.empty() ? "" : t.name + " reduced",
                                         "sfx reduce " + src.name));
    r.data()["ok"] = r.ok();
    return r.ok() ? 0 : 1;
}

int cmd_extract(const std::string& file, const std::vector<std::string>& ideal, const std::string& out, Report& r) {
    const Source src = read_source(file);
    r.data()["command"] = "extract";
    r.data()["file"] = src.name;
    r.title("extract " + src.name);
    Target t = load_target(src, r);
    r.section("input");
    algebra_checks(r, t.qf.algebra, t.qf.form, "");
    if (!r.ok()) return 1;

    const Subspace j = ideal_from_labels(t.qf.algebra.space(), ideal);
    const Extraction e = extract_standard(quadruple_from_ideal(t.qf, j));
    r.section("base j-perp / j");
    describe(r, e.data.input.base, "base");
    r.section("recovered data");
    describe_data(r, e.data, "data");
    r.section("conditions");
    condition_checks(r, e.data);
    r.section("phi : standard model -> input");
    matrix_table(r, t.qf.algebra.space(), e.model.qf.algebra.space(), e.phi, "phi");
    r.section("round trip");
    r.check("verify_equivalence", e.check.ok(), capped(e.check.witnesses));
    emit_document(r, out, write_extension_document(e.data, t.name.empty() ? "" : t.name + " extracted", ""));
    r.data()["ok"] = r.ok();
    return r.ok() ? 0 : 1;
}

int cmd_tau(const std::string& file, const std::string& tau, const std::string& out, Report& r) {
    const Source src = read_source(file);
    auto doc = read_extension_document(src.text, make_loader(src.dir));
    r.data()["command"] = "tau";
    r.data()["file"] = src.name;
    r.title("tau " + src.name + (doc.name.empty() ? "" : ": " + doc.name));
    ExtensionData ext = make_extension(doc.input);
    const TauMap map{parse_linear_map(ext.input.l, ext.a->space(), tau)};
    r.line("tau = " + format_linear_map(ext.input.l, ext.a->space(), map.tau), 0);
    r.data()["tau"] = format_linear_map(ext.input.l, ext.a->space(), map.tau);

    const TauResult res = tau_transform(ext, map);
    r.section("transformed data");
    describe_data(r, res.data, "data");
    r.section("conditions");
    condition_checks(r, res.data);
    const StandardModel m1 = force_build(ext), m2 = force_build(res.data);
    r.section("phi : model(input) -> model(output)");
    matrix_table(r, m2.qf.algebra.space(), m1.qf.algebra.space(), res.phi, "phi");
    const EquivalenceReport eq = verify_equivalence(m1, m2, res.phi);
    r.check("verify_equivalence", eq.ok(), capped(eq.witnesses));
    emit_document(r, out, write_extension_document(res.data, doc.name, doc.base_ref));
    r.data()["ok"] = r.ok();
    return r.ok() ? 0 : 1;
}

int cmd_corpus_list(Report& r) {
    json entries = json::array();
    for (const auto& e : corpus()) {
        const bool ext = document_kind(e.text) == DocumentKind::Extension;
        const std::string title = json::parse(e.text).value("name", "");
        r.line(std::string(e.name) + std::string(e.name.size() < 20 ? 20 - e.name.size() : 1, ' ') +
                   (ext ? "extension  " : "algebra    ") + title,
               0);
        entries.push_back({{"name", e.name}, {"kind", ext ? "extension" : "algebra"}, {"title", title}});
    }
    r.data()["entries"] = entries;
    return 0;
}

int cmd_corpus_show(const std::string& name, Report& r) {
    const auto* e = find_corpus(name);
    if (!e) throw PreconditionError("no corpus entry named '" + name + "' (see `sfx corpus list`)");
    r.raw(std::string(e->text));
    r.data()["name"] = e->name;
    r.data()["document"] = json::parse(e->text);
    return 0;
}

}  // namespace sfx::cli
