#ifndef SFX_IO_DOCUMENT_HPP
#define SFX_IO_DOCUMENT_HPP

#include <array>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfx/doubleext.hpp"
#include "sfx/io/notation.hpp"

namespace sfx {

inline constexpr int kDocumentVersion = 1;

/*
 * {"format": "sfx-algebra", "version": 1, "name": ..., "source": ...,
 *  "basis": [{"label": "e1", "parity": "even"}, ...],
 *  "brackets": [["e1", "e4", "e3"], ...],
 *  "form": {"parity": "even", "wedge": "2 e1*∧e2* - e3*∧e4*"} | {"parity": ..., "gram": [[...], ...]}}
 */
struct AlgebraDocument {
    std::string name;
    std::string source;
    std::vector<BasisVector> declared;
    CanonicalSpace canon;
    LieSuperAlgebra algebra;
    std::optional<SuperForm> form;

    // Throws PreconditionError without a form.
    QuasiFrobenius quasi_frobenius() const;
};

// Throws ParseError (with line and column for JSON syntax) or ValidationError for inconsistent brackets.
AlgebraDocument read_algebra_document(std::string_view text);

std::string write_algebra_document(const LieSuperAlgebra& alg, const std::optional<SuperForm>& form,
                                   const std::string& name = "", const std::string& source = "");
std::string write_algebra_document(const AlgebraDocument& doc);

// Returns the text of a referenced base document; throws ParseError when it cannot be found.
using DocumentLoader = std::function<std::string(const std::string& ref)>;

// Files relative to dir first, then corpus entries.
DocumentLoader make_loader(const std::filesystem::path& dir);

/*
 * {"format": "sfx-extension", "version": 1, "name": ..., "model": "orthosymplectic" | "periplectic",
 *  "base": "<ref>" | {inline algebra document},
 *  "l": [{"label": "L1", "parity": "even"}, ...],
 *  "xi": {"L1": "e2⊗e1*", ...}, "gamma": "...", "epsilon": "...",
 *  "reference": {"beta": ..., "alpha": ..., "brackets": [[left, right, value], ...]}}
 */
struct ExtensionDocument {
    struct Reference {
        std::string beta;
        std::string alpha;
        std::vector<std::array<std::string, 3>> brackets;
        bool empty() const { return beta.empty() && alpha.empty() && brackets.empty(); }
    };

    std::string name;
    ModelKind model = ModelKind::Orthosymplectic;
    std::string base_ref;  // empty for an inline base
    AlgebraDocument base;
    std::vector<BasisVector> l_declared;
    CanonicalSpace l_canon;
    ExtensionInput input;
    Reference reference;
};

ExtensionDocument read_extension_document(std::string_view text, const DocumentLoader& load);

std::string write_extension_document(const ExtensionData& ext, const std::string& name, const std::string& base_ref,
                                     const ExtensionDocument::Reference& reference = {});

// Printed bracket table resolved against the labels of d.
std::vector<ReferenceLine> reference_lines(const ExtensionDocument::Reference& ref, const SuperSpace& d);

enum class DocumentKind { Algebra, Extension };

// Reads only the "format" field.
DocumentKind document_kind(std::string_view text);

}  // namespace sfx

#endif
