#include "quadric/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <functional>
#include <json.hpp>
#include <map>
#include <memory>

#include "quadric/acceptance.hpp"
#include "quadric/errors.hpp"
#include "quadric/expr.hpp"
#include "quadric/go_even.hpp"
#include "quadric/gysin.hpp"
#include "quadric/maps.hpp"
#include "quadric/primitivity.hpp"
#include "quadric/toda.hpp"

namespace quadric {

namespace {

using json = nlohmann::ordered_json;

json poly_json(const Polynomial& p) {
    json out = json::array();
    const Ring& ring = *p.ring();
    for (const Monomial& m : p.terms()) {
        json mono = json::array();
        for (std::size_t v = 0; v < ring.size(); ++v)
            if (m.exps[v])
                mono.push_back(json::array({ring.var(v).name, m.exps[v]}));
        out.push_back(std::move(mono));
    }
    return out;
}

class Session {
public:
    Session(const CliRequest& req, std::ostream& out) : req_(req), out_(out) {}

    RingPtr ring() {
        if (!req_.ring)
            throw PreconditionViolation(req_.command + ": --ring is required");
        if (!ring_)
            ring_ = ring_for(*req_.ring);
        return ring_;
    }

    RingPtr ring_for(const RingSelector& sel) const {
        const int r = sel.rank;
        if (sel.family == "go")
            return make_ring(r % 2 ? Family::BGO_odd : Family::BGO_even, r, req_.degree_cap);
        if (sel.family == "o")
            return make_ring(Family::BO, r, req_.degree_cap);
        if (sel.family == "gl")
            return make_ring(Family::BGL, r, req_.degree_cap);
        if (sel.family == "toda")
            return make_ring(Family::TodaA, r, req_.degree_cap);
        throw PreconditionViolation("unknown ring family '" + sel.family + "'");
    }

    // Labels such as alpha'_3 resolve against the primitive generators of `ring`.
    LabelResolver labels_for(const RingPtr& ring) {
        return [this, ring](std::string_view name) -> const Polynomial* {
            if (name.find('\'') == std::string_view::npos && name.find('_') == std::string_view::npos)
                return nullptr;
            auto it = label_cache_.find(ring->key());
            if (it == label_cache_.end()) {
                std::unique_ptr<GeneratorSet> gs;
                try {
                    gs = std::make_unique<GeneratorSet>(ring->family() == Family::TodaA
                                                            ? toda_generators(ring->rank())
                                                            : ph_generators(ring));
                } catch (const MathDomainError&) {
                    gs = std::make_unique<GeneratorSet>();
                }
                it = label_cache_.emplace(ring->key(), std::move(gs)).first;
            }
            return it->second->find(name);
        };
    }

    std::vector<Polynomial> exprs_in(const RingPtr& ring) {
        if (req_.exprs.empty())
            throw PreconditionViolation(req_.command + ": at least one --expr is required");
        std::vector<Polynomial> out;
        for (const auto& src : req_.exprs)
            out.push_back(parse_polynomial(src, ring, labels_for(ring)));
        return out;
    }

    json ring_json(const RingPtr& r) const {
        return json{{"family", r->family_tag()}, {"rank", r->rank()}};
    }

    bool text() const { return req_.format == OutputFormat::Text; }

    void emit(const RingPtr& r, const Polynomial& p) {
        if (text())
            out_ << p.str() << '\n';
        else
            out_ << json{{"ring", ring_json(r)}, {"result", poly_json(p)}}.dump() << '\n';
    }

    void emit_bool(const RingPtr& r, bool value, const Polynomial* witness = nullptr) {
        if (text()) {
            out_ << (value ? "true" : "false");
            if (witness)
                out_ << "  witness: " << witness->str();
            out_ << '\n';
            return;
        }
        json j{{"ring", ring_json(r)}, {"result", value}};
        if (witness)
            j["witness"] = poly_json(*witness);
        out_ << j.dump() << '\n';
    }

    void emit_list(const RingPtr& r, const std::vector<std::pair<std::string, Polynomial>>& items) {
        if (text()) {
            for (const auto& [label, p] : items)
                out_ << label << ": " << p.str() << '\n';
            return;
        }
        json list = json::array();
        for (const auto& [label, p] : items)
            list.push_back(json{{"label", label}, {"poly", poly_json(p)}});
        out_ << json{{"ring", ring_json(r)}, {"result", list}}.dump() << '\n';
    }

    void map_each(const RingPtr& source, const std::function<Polynomial(const Polynomial&)>& f) {
        for (const auto& p : exprs_in(source)) {
            const Polynomial q = f(p);
            emit(q.ring(), q);
        }
    }

    std::ostream& out() { return out_; }
    const CliRequest& req() const { return req_; }

private:
    const CliRequest& req_;
    std::ostream& out_;
    RingPtr ring_;
    std::map<std::string, std::unique_ptr<GeneratorSet>> label_cache_;
};

void require_go_even(const RingPtr& r, const std::string& cmd) {
    if (r->family() != Family::BGO_even)
        throw PreconditionViolation(cmd + " needs an even-rank go ring");
}

void cmd_ring_info(Session& s) {
    const RingPtr r = s.ring();
    if (s.text()) {
        s.out() << r->describe() << "  (degree cap " << r->degree_cap() << ")\n";
        for (const VarSpec& v : r->vars())
            s.out() << "  " << v.name << "  degree " << v.degree << '\n';
        return;
    }
    json vars = json::array();
    for (const VarSpec& v : r->vars())
        vars.push_back(json{{"name", v.name}, {"degree", v.degree}});
    s.out() << json{{"ring", s.ring_json(r)},
                    {"result", json{{"description", r->describe()},
                                    {"degree_cap", r->degree_cap()},
                                    {"variables", vars}}}}
                   .dump()
            << '\n';
}

void cmd_normalize(Session& s) {
    const RingPtr r = s.ring();
    s.map_each(r, [&](const Polynomial& p) {
        return r->family() == Family::BGO_even ? normal_form(p) : p;
    });
}

void cmd_eq(Session& s) {
    const RingPtr r = s.ring();
    const auto ps = s.exprs_in(r);
    if (ps.size() != 2)
        throw PreconditionViolation("eq takes exactly two --expr values");
    const bool same = r->family() == Family::BGO_even ? eq_go_even(ps[0], ps[1]) : ps[0] == ps[1];
    s.emit_bool(r, same);
}

void cmd_pistar(Session& s) {
    const RingPtr r = s.ring();
    if (r->family() == Family::BGO_even) {
        const HomMap m = pistar_even(r);
        s.map_each(r, [&](const Polynomial& p) { return m(p); });
    } else if (r->family() == Family::BGO_odd) {
        const HomMap m = pistar_odd(r);
        s.map_each(r, [&](const Polynomial& p) { return m(p); });
    } else {
        throw PreconditionViolation("pistar needs a go ring");
    }
}

void cmd_action(Session& s) {
    const RingPtr r = s.ring();
    switch (r->family()) {
    case Family::BGO_even: {
        const HomMap& m = action_even(r);
        s.map_each(r, [&](const Polynomial& p) { return m(p); });
        break;
    }
    case Family::BGO_odd: {
        const HomMap m = action_odd(r);
        s.map_each(r, [&](const Polynomial& p) { return m(p); });
        break;
    }
    case Family::BO:
    case Family::BGL:
    case Family::TodaA: {
        const TodaContext& ctx = toda_context(r);
        s.map_each(r, [&](const Polynomial& p) { return ctx.coaction(p); });
        break;
    }
    default:
        throw PreconditionViolation("action is not defined on " + r->describe());
    }
}

void cmd_chern(Session& s) {
    const RingPtr r = s.ring();
    const RingPtr gl = make_ring(Family::BGL, r->rank(), r->degree_cap());
    if (r->family() == Family::BGO_even) {
        const HomMap m = chern_to_go_even(r);
        s.map_each(gl, [&](const Polynomial& p) { return m(p); });
    } else if (r->family() == Family::BGO_odd) {
        const HomMap m = chern_to_go_odd(r);
        s.map_each(gl, [&](const Polynomial& p) { return m(p); });
    } else {
        throw PreconditionViolation("chern needs a go ring; expressions are read in gl");
    }
}

void cmd_gysin_d(Session& s) {
    const RingPtr r = s.ring();
    if (r->family() != Family::BO)
        throw PreconditionViolation("gysin-d needs an o ring");
    s.map_each(r, [&](const Polynomial& p) {
        return r->rank() % 2 ? gysin_d_odd(p) : gysin_d_even(p);
    });
}

void cmd_boundary(Session& s) {
    const RingPtr r = s.ring();
    const int parity = s.req().parity;
    if (r->family() == Family::BGO_odd)
        s.map_each(r, [&](const Polynomial& p) { return boundary_odd_to_even(p, parity); });
    else if (r->family() == Family::BGO_even)
        s.map_each(r, [&](const Polynomial& p) { return boundary_even_to_odd(p, parity); });
    else
        throw PreconditionViolation("boundary needs a go ring");
}

void cmd_primitive(Session& s) {
    const RingPtr r = s.ring();
    for (const auto& p : s.exprs_in(r)) {
        const Polynomial defect = primitivity_defect(p);
        const bool ok = r->family() == Family::BGO_even ? primitive_check(p) : defect.is_zero();
        if (ok)
            s.emit_bool(r, true);
        else
            s.emit_bool(r, false, &defect);
    }
}

void cmd_primitive_generators(Session& s) {
    const RingPtr r = s.ring();
    s.emit_list(r, ph_generators(r).entries);
}

void cmd_express(Session& s) {
    const RingPtr r = s.ring();
    require_go_even(r, "express");
    const RingPtr bo = bo_ring_for(r);
    s.map_each(bo, [&](const Polynomial& p) { return express_in_generators(p, r); });
}

void cmd_toda_hat(Session& s) {
    const RingPtr r = s.ring();
    const auto& hats = toda_context(r).hat_elements();
    std::vector<std::pair<std::string, Polynomial>> items;
    for (std::size_t k = 1; k < hats.size(); ++k)
        items.emplace_back("xhat" + std::to_string(k), hats[k]);
    s.emit_list(r, items);
}

void cmd_toda_generators(Session& s) {
    const RingPtr r = s.ring();
    if (r->family() != Family::TodaA)
        throw PreconditionViolation("toda-generators needs a toda ring");
    s.emit_list(r, r->rank() == 4 ? toda_generators_N4().entries
                                  : toda_context(r).toda_generators().entries);
}

int cmd_selftest(Session& s) {
    bool all = true;
    for (int id = 1; id <= kCriterionCount; ++id) {
        const CriterionResult res = run_criterion(id);
        print_result(s.out(), res);
        all = all && res.passed;
    }
    return all ? kExitOk : 1;
}

using Handler = std::function<int(Session&)>;

template <void (*F)(Session&)>
int wrap(Session& s) {
    F(s);
    return kExitOk;
}

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"ring-info", wrap<cmd_ring_info>},
        {"normalize", wrap<cmd_normalize>},
        {"eq", wrap<cmd_eq>},
        {"pistar", wrap<cmd_pistar>},
        {"action", wrap<cmd_action>},
        {"chern", wrap<cmd_chern>},
        {"gysin-d", wrap<cmd_gysin_d>},
        {"boundary", wrap<cmd_boundary>},
        {"primitive", wrap<cmd_primitive>},
        {"primitive-generators", wrap<cmd_primitive_generators>},
        {"express", wrap<cmd_express>},
        {"toda-hat", wrap<cmd_toda_hat>},
        {"toda-generators", wrap<cmd_toda_generators>},
        {"selftest", cmd_selftest},
    };
    return table;
}

}  // namespace

std::vector<std::string> cli_commands() {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers())
        out.push_back(name);
    return out;
}

RingSelector parse_ring_selector(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0)
        throw PreconditionViolation("ring selector '" + text + "' is not <family>:<rank>");
    RingSelector sel;
    sel.family = text.substr(0, colon);
    const std::string rank = text.substr(colon + 1);
    const auto [end, ec] = std::from_chars(rank.data(), rank.data() + rank.size(), sel.rank);
    if (ec != std::errc() || end != rank.data() + rank.size() || rank.empty() || sel.rank < 1)
        throw PreconditionViolation("ring selector '" + text + "' has a bad rank");
    if (sel.family != "go" && sel.family != "o" && sel.family != "gl" && sel.family != "toda")
        throw PreconditionViolation("unknown ring family '" + sel.family +
                                    "' (expected go, o, gl or toda)");
    return sel;
}

int run_command(const CliRequest& req, std::ostream& out, std::ostream& err) {
    const auto it = handlers().find(req.command);
    if (it == handlers().end()) {
        err << "unknown command '" << req.command << "'\n";
        return kExitUsage;
    }
    if (req.parity != 0 && req.parity != 1) {
        err << "--parity must be 0 or 1\n";
        return kExitUsage;
    }
    try {
        Session s(req, out);
        return it->second(s);
    } catch (const MathDomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMath;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact F2 computations with the cohomology of BO, BGO and BGL"};
    app.require_subcommand(1, 1);

    CliRequest req;
    std::string ring_text, format_text = "text";
    for (const auto& name : cli_commands()) {
        CLI::App* sub = app.add_subcommand(name);
        if (name == "selftest")
            continue;
        sub->add_option("--ring,--from", ring_text, "family:rank, family in go|o|gl|toda");
        sub->add_option("--expr", req.exprs, "expression (repeatable)");
        sub->add_option("--parity", req.parity, "parity 0|1")->check(CLI::Range(0, 1));
        sub->add_option("--format", format_text, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--degree-cap", req.degree_cap, "degree cap")->check(CLI::Range(1, 255));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    req.command = app.get_subcommands().front()->get_name();
    req.format = format_text == "json" ? OutputFormat::Json : OutputFormat::Text;
    if (!ring_text.empty()) {
        try {
            req.ring = parse_ring_selector(ring_text);
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
    }
    return run_command(req, out, err);
}

}  // namespace quadric
