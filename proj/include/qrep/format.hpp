#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "qrep/error.hpp"
#include "qrep/field.hpp"
#include "qrep/nrep.hpp"
#include "qrep/quiver.hpp"
#include "qrep/rep.hpp"

namespace qrep {

/// A named collection of quivers, representations, n-representations and
/// morphisms over one field. Entries keep their declaration order.
template <class F>
struct Document {
    using RepMor = RepMorphism<F>;
    using NRepMor = NRepMorphism<F>;

    struct QuiverEntry {
        std::string name;
        Quiver quiver;
    };
    struct RepEntry {
        std::string name;
        std::string quiver;
        Rep<F> rep;
    };
    struct NRepEntry {
        std::string name;
        std::vector<std::string> quivers;
        std::vector<std::string> components;
        NRep<F> nrep;
    };
    struct MorphismEntry {
        std::string name;
        std::string source;
        std::string target;
        std::variant<RepMor, NRepMor> morphism;
    };

    F field;
    std::vector<QuiverEntry> quivers;
    std::vector<RepEntry> reps;
    std::vector<NRepEntry> nreps;
    std::vector<MorphismEntry> morphisms;

    explicit Document(F k) : field(std::move(k)) {}

    const QuiverEntry* find_quiver(std::string_view name) const { return find_in(quivers, name); }
    const RepEntry* find_rep(std::string_view name) const { return find_in(reps, name); }
    const NRepEntry* find_nrep(std::string_view name) const { return find_in(nreps, name); }
    const MorphismEntry* find_morphism(std::string_view name) const { return find_in(morphisms, name); }

    /// Reps and n-reps share one namespace.
    bool has_object(std::string_view name) const { return find_rep(name) || find_nrep(name); }

    /// Name of a structurally equal quiver, registering `q` under a fresh
    /// name when there is none.
    std::string quiver_name(const Quiver& q) {
        for (const auto& e : quivers)
            if (e.quiver == q) return e.name;
        std::string name = fresh_name("Q", [&](const std::string& n) { return find_quiver(n) != nullptr; });
        quivers.push_back({name, q});
        return name;
    }

    std::string fresh_object_name(const std::string& stem) const {
        return fresh_name(stem, [&](const std::string& n) { return has_object(n); });
    }

    std::string fresh_morphism_name(const std::string& stem) const {
        return fresh_name(stem, [&](const std::string& n) { return find_morphism(n) != nullptr; });
    }

    void add_rep(const std::string& name, const Rep<F>& rep) {
        require_new_object(name);
        reps.push_back({name, quiver_name(rep.quiver()), rep});
    }

    /// Components are stored as reps named NAME_c1, NAME_c2, ...
    void add_nrep(const std::string& name, const NRep<F>& x) {
        require_new_object(name);
        NRepEntry entry{name, {}, {}, x};
        for (std::size_t m = 0; m < x.levels(); ++m) {
            entry.quivers.push_back(quiver_name(x.quiver(m)));
            std::string comp = fresh_object_name(name + "_c" + std::to_string(m + 1));
            add_rep(comp, x.component(m));
            entry.components.push_back(comp);
        }
        nreps.push_back(std::move(entry));
    }

    void add_morphism(const std::string& name, const std::string& source, const std::string& target,
                      std::variant<RepMor, NRepMor> mor) {
        if (find_morphism(name)) throw error(errc::duplicate_id, "morphism '" + name + "'");
        morphisms.push_back({name, source, target, std::move(mor)});
    }

private:
    template <class Vec>
    static auto find_in(const Vec& v, std::string_view name) -> decltype(&v.front()) {
        for (const auto& e : v)
            if (e.name == name) return &e;
        return nullptr;
    }

    template <class Taken>
    static std::string fresh_name(const std::string& stem, Taken taken) {
        if (!taken(stem)) return stem;
        for (std::size_t i = 2;; ++i) {
            std::string n = stem + "_" + std::to_string(i);
            if (!taken(n)) return n;
        }
    }

    void require_new_object(const std::string& name) const {
        if (has_object(name)) throw error(errc::duplicate_id, "object '" + name + "'");
    }
};

using AnyDocument = std::variant<Document<Rationals>, Document<PrimeField>>;

namespace detail::fmt {

struct Pos {
    std::size_t line = 1;
    std::size_t col = 1;
};

enum class Tok { ident, punct, arrow, end };

struct Token {
    Tok kind;
    std::string text;
    Pos pos;
};

inline bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    Pos pos;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++pos.line;
                pos.col = 1;
            } else {
                ++pos.col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
        } else if (ident_char(c)) {
            Token t{Tok::ident, {}, pos};
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
            out.push_back(std::move(t));
        } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            out.push_back({Tok::arrow, "->", pos});
            advance(2);
        } else if (std::string_view("{}()[];:,=-/").find(c) != std::string_view::npos) {
            out.push_back({Tok::punct, std::string(1, c), pos});
            advance(1);
        } else {
            throw parse_error(errc::syntax_error, pos.line, pos.col,
                              "unexpected character '" + std::string(1, c) + "'");
        }
    }
    out.push_back({Tok::end, "", pos});
    return out;
}

struct Entry {
    integer num;
    integer den;
};

struct RawMatrix {
    Pos pos;
    std::vector<std::vector<Entry>> rows;
};

struct ArrowDecl {
    Pos pos;
    std::string id, source, target;
};

struct QuiverDecl {
    Pos pos;
    std::string name;
    std::vector<std::pair<std::string, Pos>> vertices;
    std::vector<ArrowDecl> arrows;
};

struct DimStmt {
    Pos pos;
    std::string vertex;
    std::size_t value;
};

struct MapStmt {
    Pos pos;
    std::string arrow;
    RawMatrix matrix;
};

struct RepDecl {
    Pos pos;
    std::string name;
    std::string quiver;
    Pos quiver_pos;
    std::vector<DimStmt> dims;
    std::vector<MapStmt> maps;
};

struct ComponentStmt {
    Pos pos;
    std::size_t index;
    std::string rep;
};

struct ConnectorStmt {
    Pos pos;
    std::size_t level;
    std::string prev_arrow, next_arrow;
    RawMatrix matrix;
};

struct NRepDecl {
    Pos pos;
    std::string name;
    std::vector<std::pair<std::string, Pos>> quivers;
    std::vector<ComponentStmt> components;
    std::vector<ConnectorStmt> connectors;
};

struct AtStmt {
    Pos pos;
    std::optional<std::size_t> level;
    std::string vertex;
    RawMatrix matrix;
};

struct MorphismDecl {
    Pos pos;
    std::string name, source, target;
    Pos source_pos, target_pos;
    std::vector<AtStmt> ats;
};

struct Ast {
    FieldSpec field;
    std::vector<QuiverDecl> quivers;
    std::vector<RepDecl> reps;
    std::vector<NRepDecl> nreps;
    std::vector<MorphismDecl> morphisms;
};

inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    Ast parse() {
        Ast ast;
        if (peek().kind == Tok::end) fail(peek().pos, "missing field declaration");
        if (!is_word("field")) fail(peek().pos, "expected 'field' declaration first");
        ast.field = parse_field();
        while (peek().kind != Tok::end) {
            const Token& kw = peek();
            if (kw.kind != Tok::ident) fail(kw.pos, "expected a declaration, found '" + kw.text + "'");
            if (kw.text == "quiver") ast.quivers.push_back(parse_quiver());
            else if (kw.text == "rep") ast.reps.push_back(parse_rep());
            else if (kw.text == "nrep") ast.nreps.push_back(parse_nrep());
            else if (kw.text == "morphism") ast.morphisms.push_back(parse_morphism());
            else if (kw.text == "field") fail(kw.pos, "duplicate field declaration");
            else fail(kw.pos, "unknown declaration '" + kw.text + "'");
        }
        return ast;
    }

private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;

    [[noreturn]] static void fail(Pos p, const std::string& msg) {
        throw parse_error(errc::syntax_error, p.line, p.col, msg);
    }

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(at_ + ahead, toks_.size() - 1)]; }
    const Token& next() {
        const Token& t = toks_[at_];
        if (at_ + 1 < toks_.size()) ++at_;
        return t;
    }

    bool is_punct(char c, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::punct && peek(ahead).text[0] == c;
    }
    bool is_word(std::string_view w) const { return peek().kind == Tok::ident && peek().text == w; }

    static std::string describe(const Token& t) { return t.kind == Tok::end ? "end of input" : "'" + t.text + "'"; }

    void expect_punct(char c) {
        if (!is_punct(c)) fail(peek().pos, std::string("expected '") + c + "', found " + describe(peek()));
        next();
    }
    void expect_word(std::string_view w) {
        if (!is_word(w)) fail(peek().pos, "expected '" + std::string(w) + "', found " + describe(peek()));
        next();
    }
    void expect_arrow() {
        if (peek().kind != Tok::arrow) fail(peek().pos, "expected '->', found " + describe(peek()));
        next();
    }
    const Token& ident(std::string_view what) {
        if (peek().kind != Tok::ident) fail(peek().pos, "expected " + std::string(what) + ", found " + describe(peek()));
        return next();
    }
    std::size_t natural(std::string_view what) {
        const Token& t = ident(what);
        if (!all_digits(t.text) || t.text.size() > 9) fail(t.pos, "expected " + std::string(what) + ", found '" + t.text + "'");
        return std::stoul(t.text);
    }

    FieldSpec parse_field() {
        next();
        const Token& t = ident("field name");
        if (t.text == "QQ") return FieldSpec::rationals();
        if (t.text != "GF") fail(t.pos, "unknown field '" + t.text + "'");
        expect_punct('(');
        const Token& p = ident("characteristic");
        if (!all_digits(p.text)) fail(p.pos, "expected characteristic, found '" + p.text + "'");
        expect_punct(')');
        integer value(p.text);
        if (value > integer(0xFFFFFFFFu)) throw parse_error(errc::invalid_field, p.pos.line, p.pos.col, "GF(" + p.text + ")");
        try {
            return FieldSpec::prime(value.convert_to<std::uint64_t>());
        } catch (const error& e) {
            throw parse_error(e.code(), p.pos.line, p.pos.col, e.detail());
        }
    }

    QuiverDecl parse_quiver() {
        QuiverDecl d;
        d.pos = next().pos;
        d.name = ident("quiver name").text;
        expect_punct('{');
        bool seen_vertices = false, seen_arrows = false;
        while (!is_punct('}')) {
            if (is_word("vertices")) {
                if (seen_vertices) fail(peek().pos, "duplicate vertices clause");
                seen_vertices = true;
                next();
                expect_punct(':');
                while (peek().kind == Tok::ident) {
                    const Token& v = next();
                    d.vertices.emplace_back(v.text, v.pos);
                }
                expect_punct(';');
            } else if (is_word("arrows")) {
                if (seen_arrows) fail(peek().pos, "duplicate arrows clause");
                seen_arrows = true;
                next();
                expect_punct(':');
                if (!is_punct(';')) {
                    while (true) {
                        ArrowDecl a;
                        const Token& id = ident("arrow id");
                        a.pos = id.pos;
                        a.id = id.text;
                        expect_punct(':');
                        a.source = ident("source vertex").text;
                        expect_arrow();
                        a.target = ident("target vertex").text;
                        d.arrows.push_back(std::move(a));
                        if (!is_punct(',')) break;
                        next();
                    }
                }
                expect_punct(';');
            } else {
                fail(peek().pos, "expected 'vertices' or 'arrows', found " + describe(peek()));
            }
        }
        next();
        return d;
    }

    Entry entry() {
        bool negative = false;
        if (is_punct('-')) {
            next();
            negative = true;
        }
        const Token& n = ident("number");
        if (!all_digits(n.text)) fail(n.pos, "expected number, found '" + n.text + "'");
        Entry e{integer(n.text), integer(1)};
        if (is_punct('/')) {
            next();
            const Token& d = ident("denominator");
            if (!all_digits(d.text)) fail(d.pos, "expected denominator, found '" + d.text + "'");
            e.den = integer(d.text);
            if (e.den == 0) fail(d.pos, "zero denominator");
        }
        if (negative) e.num = -e.num;
        return e;
    }

    RawMatrix matrix() {
        RawMatrix m;
        m.pos = peek().pos;
        expect_punct('[');
        if (is_punct(']')) {
            next();
            return m;
        }
        while (true) {
            expect_punct('[');
            std::vector<Entry> row;
            if (!is_punct(']')) {
                while (true) {
                    row.push_back(entry());
                    if (!is_punct(',')) break;
                    next();
                }
            }
            expect_punct(']');
            m.rows.push_back(std::move(row));
            if (!is_punct(',')) break;
            next();
        }
        expect_punct(']');
        return m;
    }

    RepDecl parse_rep() {
        RepDecl d;
        d.pos = next().pos;
        d.name = ident("rep name").text;
        expect_word("on");
        const Token& q = ident("quiver name");
        d.quiver = q.text;
        d.quiver_pos = q.pos;
        expect_punct('{');
        while (!is_punct('}')) {
            if (is_word("dim")) {
                DimStmt s;
                s.pos = next().pos;
                s.vertex = ident("vertex").text;
                expect_punct('=');
                s.value = natural("dimension");
                expect_punct(';');
                d.dims.push_back(std::move(s));
            } else if (is_word("map")) {
                MapStmt s;
                s.pos = next().pos;
                s.arrow = ident("arrow").text;
                expect_punct('=');
                s.matrix = matrix();
                expect_punct(';');
                d.maps.push_back(std::move(s));
            } else {
                fail(peek().pos, "expected 'dim' or 'map', found " + describe(peek()));
            }
        }
        next();
        return d;
    }

    NRepDecl parse_nrep() {
        NRepDecl d;
        d.pos = next().pos;
        d.name = ident("nrep name").text;
        expect_word("on");
        expect_punct('(');
        while (true) {
            const Token& q = ident("quiver name");
            d.quivers.emplace_back(q.text, q.pos);
            if (!is_punct(',')) break;
            next();
        }
        expect_punct(')');
        expect_punct('{');
        while (!is_punct('}')) {
            if (is_word("component")) {
                ComponentStmt s;
                s.pos = next().pos;
                s.index = natural("component index");
                expect_punct('=');
                s.rep = ident("rep name").text;
                expect_punct(';');
                d.components.push_back(std::move(s));
            } else if (is_word("connector")) {
                ConnectorStmt s;
                s.pos = next().pos;
                s.level = natural("connector level");
                expect_punct('(');
                s.prev_arrow = ident("arrow").text;
                expect_punct(',');
                s.next_arrow = ident("arrow").text;
                expect_punct(')');
                expect_punct('=');
                s.matrix = matrix();
                expect_punct(';');
                d.connectors.push_back(std::move(s));
            } else {
                fail(peek().pos, "expected 'component' or 'connector', found " + describe(peek()));
            }
        }
        next();
        return d;
    }

    MorphismDecl parse_morphism() {
        MorphismDecl d;
        d.pos = next().pos;
        d.name = ident("morphism name").text;
        expect_punct(':');
        const Token& s = ident("source");
        d.source = s.text;
        d.source_pos = s.pos;
        expect_arrow();
        const Token& t = ident("target");
        d.target = t.text;
        d.target_pos = t.pos;
        expect_punct('{');
        while (!is_punct('}')) {
            AtStmt a;
            a.pos = peek().pos;
            expect_word("at");
            if (is_punct('(')) {
                next();
                a.level = natural("component index");
                expect_punct(',');
                a.vertex = ident("vertex").text;
                expect_punct(')');
            } else {
                a.vertex = ident("vertex").text;
            }
            expect_punct('=');
            a.matrix = matrix();
            expect_punct(';');
            d.ats.push_back(std::move(a));
        }
        next();
        return d;
    }
};

[[noreturn]] inline void fail_at(Pos p, errc code, const std::string& msg) {
    throw parse_error(code, p.line, p.col, msg);
}

template <class F>
typename F::value_type to_scalar(const F& k, const Entry& e, Pos p) {
    if constexpr (std::is_same_v<F, PrimeField>) {
        if (e.den % k.characteristic() == 0)
            fail_at(p, errc::syntax_error, "denominator vanishes in " + k.spec().to_string());
    }
    return k.from_fraction(e.num, e.den);
}

template <class F>
Matrix<F> to_matrix(const F& k, const RawMatrix& raw, std::size_t rows, std::size_t cols, const std::string& what) {
    auto mismatch = [&](const std::string& got) {
        fail_at(raw.pos, errc::shape_mismatch,
                what + " is " + got + ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
    };
    if (raw.rows.size() != rows) mismatch(std::to_string(raw.rows.size()) + " rows");
    Matrix<F> m(k, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (raw.rows[i].size() != cols)
            mismatch("row " + std::to_string(i + 1) + " with " + std::to_string(raw.rows[i].size()) + " entries");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = to_scalar(k, raw.rows[i][j], raw.pos);
    }
    return m;
}

/// Runs `body`, relocating any library error to `p`.
template <class Body>
auto located(Pos p, Body body) -> decltype(body()) {
    try {
        return body();
    } catch (const parse_error&) {
        throw;
    } catch (const error& e) {
        throw parse_error(e.code(), p.line, p.col, e.detail());
    }
}

template <class F>
Document<F> build(const Ast& ast, F k) {
    Document<F> doc(k);

    for (const auto& q : ast.quivers) {
        if (doc.find_quiver(q.name)) fail_at(q.pos, errc::duplicate_id, "quiver '" + q.name + "'");
        std::vector<std::string> vs;
        for (const auto& [v, p] : q.vertices) vs.push_back(v);
        std::vector<Arrow> as;
        for (const auto& a : q.arrows) as.push_back({a.id, a.source, a.target});
        doc.quivers.push_back({q.name, located(q.pos, [&] { return Quiver(vs, as); })});
    }

    auto quiver_ref = [&](const std::string& name, Pos p) -> const Quiver& {
        auto* e = doc.find_quiver(name);
        if (!e) fail_at(p, errc::unresolved_name, "no quiver '" + name + "'");
        return e->quiver;
    };

    for (const auto& r : ast.reps) {
        if (doc.has_object(r.name)) fail_at(r.pos, errc::duplicate_id, "object '" + r.name + "'");
        const Quiver& q = quiver_ref(r.quiver, r.quiver_pos);
        std::vector<std::size_t> dims(q.vertex_count(), 0);
        std::vector<bool> dim_seen(q.vertex_count(), false);
        for (const auto& s : r.dims) {
            auto v = q.find_vertex(s.vertex);
            if (!v) fail_at(s.pos, errc::unresolved_name, "no vertex '" + s.vertex + "' in quiver '" + r.quiver + "'");
            if (dim_seen[*v]) fail_at(s.pos, errc::duplicate_id, "dim of vertex '" + s.vertex + "' given twice");
            dim_seen[*v] = true;
            dims[*v] = s.value;
        }
        std::vector<std::optional<Matrix<F>>> maps(q.arrow_count());
        for (const auto& s : r.maps) {
            auto a = q.find_arrow(s.arrow);
            if (!a) fail_at(s.pos, errc::unresolved_name, "no arrow '" + s.arrow + "' in quiver '" + r.quiver + "'");
            if (maps[*a]) fail_at(s.pos, errc::duplicate_id, "map of arrow '" + s.arrow + "' given twice");
            maps[*a] = to_matrix(k, s.matrix, dims[q.target(*a)], dims[q.source(*a)], "map '" + s.arrow + "'");
        }
        std::vector<Matrix<F>> full;
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
            std::size_t rows = dims[q.target(a)], cols = dims[q.source(a)];
            if (!maps[a] && rows != 0 && cols != 0)
                fail_at(r.pos, errc::shape_mismatch, "rep '" + r.name + "' leaves the map of arrow '" +
                                                         q.arrows()[a].id + "' unspecified");
            full.push_back(maps[a] ? *maps[a] : Matrix<F>(k, rows, cols));
        }
        doc.reps.push_back({r.name, r.quiver, located(r.pos, [&] { return Rep<F>(q, k, dims, full); })});
    }

    for (const auto& n : ast.nreps) {
        if (doc.has_object(n.name)) fail_at(n.pos, errc::duplicate_id, "object '" + n.name + "'");
        std::vector<Quiver> qs;
        std::vector<std::string> qnames;
        for (const auto& [name, p] : n.quivers) {
            qs.push_back(quiver_ref(name, p));
            qnames.push_back(name);
        }
        std::vector<std::optional<std::string>> comp_names(qs.size());
        for (const auto& c : n.components) {
            if (c.index < 1 || c.index > qs.size())
                fail_at(c.pos, errc::index_out_of_range, "component " + std::to_string(c.index) + " of " +
                                                             std::to_string(qs.size()));
            if (comp_names[c.index - 1]) fail_at(c.pos, errc::duplicate_id, "component " + std::to_string(c.index) + " given twice");
            auto* r = doc.find_rep(c.rep);
            if (!r) fail_at(c.pos, errc::unresolved_name, "no rep '" + c.rep + "'");
            if (!(r->rep.quiver() == qs[c.index - 1]))
                fail_at(c.pos, errc::component_quiver_mismatch,
                        "rep '" + c.rep + "' is not on quiver '" + qnames[c.index - 1] + "'");
            comp_names[c.index - 1] = c.rep;
        }
        std::vector<Rep<F>> comps;
        std::vector<std::string> names;
        for (std::size_t m = 0; m < qs.size(); ++m) {
            if (!comp_names[m]) fail_at(n.pos, errc::unresolved_name, "nrep '" + n.name + "' has no component " + std::to_string(m + 1));
            comps.push_back(doc.find_rep(*comp_names[m])->rep);
            names.push_back(*comp_names[m]);
        }
        std::map<ConnectorKey, Matrix<F>> conn;
        for (const auto& c : n.connectors) {
            if (c.level < 2 || c.level > qs.size())
                fail_at(c.pos, errc::index_out_of_range, "connector level " + std::to_string(c.level) + " outside 2.." +
                                                             std::to_string(qs.size()));
            std::size_t l = c.level - 2;
            auto a = qs[l].find_arrow(c.prev_arrow);
            if (!a) fail_at(c.pos, errc::unresolved_name, "no arrow '" + c.prev_arrow + "' in quiver '" + qnames[l] + "'");
            auto b = qs[l + 1].find_arrow(c.next_arrow);
            if (!b) fail_at(c.pos, errc::unresolved_name, "no arrow '" + c.next_arrow + "' in quiver '" + qnames[l + 1] + "'");
            ConnectorKey key{l, *a, *b};
            if (conn.count(key)) fail_at(c.pos, errc::duplicate_id, "connector given twice");
            conn.emplace(key, to_matrix(k, c.matrix, comps[l + 1].dim(qs[l + 1].source(*b)),
                                        comps[l].dim(qs[l].target(*a)),
                                        "connector (" + c.prev_arrow + ", " + c.next_arrow + ")"));
        }
        doc.nreps.push_back({n.name, qnames, names, located(n.pos, [&] { return nrep_check(qs, comps, conn); })});
    }

    for (const auto& d : ast.morphisms) {
        if (doc.find_morphism(d.name)) fail_at(d.pos, errc::duplicate_id, "morphism '" + d.name + "'");
        if (!doc.has_object(d.source)) fail_at(d.source_pos, errc::unresolved_name, "no object '" + d.source + "'");
        if (!doc.has_object(d.target)) fail_at(d.target_pos, errc::unresolved_name, "no object '" + d.target + "'");
        auto* rs = doc.find_rep(d.source);
        auto* rt = doc.find_rep(d.target);
        if (bool(rs) != bool(rt))
            fail_at(d.pos, errc::endpoint_mismatch, "morphism '" + d.name + "' mixes a rep and an nrep");

        // One slot per (component, vertex); reps are the single-component case.
        std::vector<const Rep<F>*> src_comps, tgt_comps;
        if (rs) {
            src_comps = {&rs->rep};
            tgt_comps = {&rt->rep};
        } else {
            for (const auto& c : doc.find_nrep(d.source)->nrep.components()) src_comps.push_back(&c);
            for (const auto& c : doc.find_nrep(d.target)->nrep.components()) tgt_comps.push_back(&c);
        }
        if (src_comps.size() != tgt_comps.size())
            fail_at(d.pos, errc::quiver_mismatch, "source and target have different numbers of components");
        for (std::size_t m = 0; m < src_comps.size(); ++m)
            if (!(src_comps[m]->quiver() == tgt_comps[m]->quiver()))
                fail_at(d.pos, errc::quiver_mismatch, "source and target live on different quivers");

        std::vector<std::vector<std::optional<Matrix<F>>>> slots;
        for (auto* c : src_comps) slots.emplace_back(c->quiver().vertex_count());
        for (const auto& a : d.ats) {
            std::size_t m = 0;
            if (rs && a.level) fail_at(a.pos, errc::syntax_error, "rep morphisms use 'at VERTEX'");
            if (!rs) {
                if (!a.level) fail_at(a.pos, errc::syntax_error, "nrep morphisms use 'at (COMPONENT, VERTEX)'");
                if (*a.level < 1 || *a.level > slots.size())
                    fail_at(a.pos, errc::index_out_of_range, "component " + std::to_string(*a.level));
                m = *a.level - 1;
            }
            const Quiver& q = src_comps[m]->quiver();
            auto v = q.find_vertex(a.vertex);
            if (!v) fail_at(a.pos, errc::unresolved_name, "no vertex '" + a.vertex + "'");
            if (slots[m][*v]) fail_at(a.pos, errc::duplicate_id, "vertex '" + a.vertex + "' given twice");
            slots[m][*v] = to_matrix(k, a.matrix, tgt_comps[m]->dim(*v), src_comps[m]->dim(*v), "map at '" + a.vertex + "'");
        }
        std::vector<Matrix<F>> flat;
        for (std::size_t m = 0; m < slots.size(); ++m)
            for (std::size_t v = 0; v < slots[m].size(); ++v) {
                std::size_t rows = tgt_comps[m]->dim(v), cols = src_comps[m]->dim(v);
                if (!slots[m][v] && rows != 0 && cols != 0)
                    fail_at(d.pos, errc::shape_mismatch, "morphism '" + d.name + "' leaves vertex '" +
                                                             src_comps[m]->quiver().vertices()[v] + "' unspecified");
                flat.push_back(slots[m][v] ? *slots[m][v] : Matrix<F>(k, rows, cols));
            }
        if (rs) {
            doc.morphisms.push_back({d.name, d.source, d.target,
                                     located(d.pos, [&] { return RepMorphism<F>(rs->rep, rt->rep, flat); })});
        } else {
            const auto& ns = doc.find_nrep(d.source)->nrep;
            const auto& nt = doc.find_nrep(d.target)->nrep;
            doc.morphisms.push_back(
                {d.name, d.source, d.target, located(d.pos, [&] { return NRepMorphism<F>::from_flat(ns, nt, flat); })});
        }
    }
    return doc;
}

inline void emit_quiver(std::ostream& os, const std::string& name, const Quiver& q) {
    os << "quiver " << name << " {\n  vertices:";
    for (const auto& v : q.vertices()) os << ' ' << v;
    os << ";\n";
    if (q.arrow_count() > 0) {
        os << "  arrows: ";
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
            const auto& ar = q.arrows()[a];
            os << (a ? ", " : "") << ar.id << ": " << ar.source << " -> " << ar.target;
        }
        os << ";\n";
    }
    os << "}\n";
}

template <class F>
void emit_rep(std::ostream& os, const std::string& name, const std::string& quiver, const Rep<F>& r) {
    const Quiver& q = r.quiver();
    os << "rep " << name << " on " << quiver << " {\n";
    for (std::size_t v = 0; v < q.vertex_count(); ++v) os << "  dim " << q.vertices()[v] << " = " << r.dim(v) << ";\n";
    for (std::size_t a = 0; a < q.arrow_count(); ++a) os << "  map " << q.arrows()[a].id << " = " << r.map(a) << ";\n";
    os << "}\n";
}

} // namespace detail::fmt

/// Parses a document; every failure is a parse_error with a source location.
inline AnyDocument parse(std::string_view text) {
    using namespace detail::fmt;
    Ast ast = Parser(text).parse();
    if (ast.field.kind == FieldSpec::Kind::rationals) return build(ast, Rationals());
    return build(ast, PrimeField(ast.field.p));
}

/// "QQ" or "GF(p)".
inline FieldSpec parse_field_spec(std::string_view text) {
    return detail::fmt::Parser("field " + std::string(text)).parse().field;
}

template <class F>
std::string emit(const Document<F>& doc) {
    using namespace detail::fmt;
    std::ostringstream os;
    os << "field " << doc.field.spec().to_string() << "\n";
    for (const auto& q : doc.quivers) {
        os << "\n";
        emit_quiver(os, q.name, q.quiver);
    }
    for (const auto& r : doc.reps) {
        os << "\n";
        emit_rep(os, r.name, r.quiver, r.rep);
    }
    for (const auto& n : doc.nreps) {
        os << "\nnrep " << n.name << " on (";
        for (std::size_t m = 0; m < n.quivers.size(); ++m) os << (m ? ", " : "") << n.quivers[m];
        os << ") {\n";
        for (std::size_t m = 0; m < n.components.size(); ++m)
            os << "  component " << m + 1 << " = " << n.components[m] << ";\n";
        for (std::size_t l = 0; l + 1 < n.nrep.levels(); ++l) {
            const Quiver& qa = n.nrep.quiver(l);
            const Quiver& qb = n.nrep.quiver(l + 1);
            for (auto [a, b] : arrow_pairs(qa, qb))
                os << "  connector " << l + 2 << " (" << qa.arrows()[a].id << ", " << qb.arrows()[b].id
                   << ") = " << n.nrep.connector(l, a, b) << ";\n";
        }
        os << "}\n";
    }
    for (const auto& m : doc.morphisms) {
        os << "\nmorphism " << m.name << " : " << m.source << " -> " << m.target << " {\n";
        if (auto* f = std::get_if<RepMorphism<F>>(&m.morphism)) {
            const Quiver& q = f->source().quiver();
            for (std::size_t v = 0; v < q.vertex_count(); ++v)
                os << "  at " << q.vertices()[v] << " = " << f->at(v) << ";\n";
        } else {
            const auto& g = std::get<NRepMorphism<F>>(m.morphism);
            for (std::size_t c = 0; c < g.comps().size(); ++c) {
                const Quiver& q = g.source().quiver(c);
                for (std::size_t v = 0; v < q.vertex_count(); ++v)
                    os << "  at (" << c + 1 << ", " << q.vertices()[v] << ") = " << g.component(c).at(v) << ";\n";
            }
        }
        os << "}\n";
    }
    return os.str();
}

inline std::string emit(const AnyDocument& doc) {
    return std::visit([](const auto& d) { return emit(d); }, doc);
}

} // namespace qrep
