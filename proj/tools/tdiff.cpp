// Command-line front end: one subcommand per query, JSON report on stdout,
// one-line human summary on stderr.
//
// Exit status: 0 decided yes / computed, 1 decided no, 2 usage or input
// error, 3 state budget exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tdiff/tdiff.hpp"

namespace {

using nlohmann::json;
using namespace tdiff;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string product;
  long long node = -1;
  std::size_t budget = kDefaultStateBudget;
  bool exhaustive = false;
  bool multi_event = false;
  bool single_events = false;
  std::size_t cap = kDefaultAuxCap;
  std::string kind = "general";
  int adoption_kind = 0;

  // gen
  std::string numbers;
  std::string eps = "1/4";
  std::size_t chain = 3;
  std::size_t nodes = 6;
  std::size_t products = 2;
  double density = 0.3;
  bool equitable = false;
  std::string theta_min = "1/12";
  std::string theta_max = "1";
  std::uint64_t seed = 1;
  double adopted_fraction = 0.3;
  bool isolated_adopted = false;
  std::string output;
};

struct Input {
  Network net;
  std::string hash;
};

Input load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return Input{parse_network(text), content_hash(text)};
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

ProductId need_product(const Network& net, const Options& o) {
  if (o.product.empty()) throw UsageError("--product is required");
  if (auto t = net.find_product(o.product)) return *t;
  throw UsageError("unknown product '" + o.product + "'");
}

NodeId need_node(const Network& net, const Options& o) {
  if (o.node < 0) throw UsageError("--node is required");
  if (static_cast<std::size_t>(o.node) >= net.node_count()) {
    throw UsageError("node " + std::to_string(o.node) + " does not exist");
  }
  return static_cast<NodeId>(o.node);
}

void need_exhaustive(const Options& o, const std::string& what) {
  if (!o.exhaustive) {
    throw UsageError(what + " is solved by exhaustive enumeration; pass --exhaustive to accept exponential cost");
  }
}

json product_list(const Network& net, ProductSet p) {
  json out = json::array();
  for (ProductId t : p) out.push_back(net.product_name(t));
  return out;
}

json availability_json(const Network& net) {
  json out = json::array();
  for (NodeId i = 0; i < net.node_count(); ++i) out.push_back(product_list(net, net.availability(i)));
  return out;
}

json trace_json(const Network& net, const ReductionTrace& trace) {
  json out = json::array();
  for (const TracedEvent& e : trace.events) {
    out.push_back({{"step", e.step}, {"node", e.node}, {"product", net.product_name(e.product)}});
  }
  return out;
}

struct Report {
  json result = json::object();
  std::string summary;
  int status = kYes;
};

int emit(const std::string& command, const std::string& hash, const Report& r) {
  json doc;
  doc["command"] = command;
  doc["input_hash"] = hash;
  doc["result"] = r.result;
  doc["summary"] = r.summary;
  std::cout << doc.dump(2) << '\n';
  std::cerr << r.summary << '\n';
  return r.status;
}

Report yes_no(bool value, std::string yes, std::string no) {
  Report r;
  r.status = value ? kYes : kNo;
  r.summary = value ? std::move(yes) : std::move(no);
  return r;
}

// ---- decision subcommands ------------------------------------------------

Report cmd_well_structured(const Input& in, const Options& o) {
  const ProductId t = need_product(in.net, o);
  std::vector<Rational> theta;
  for (NodeId i = 0; i < in.net.node_count(); ++i) {
    if (!in.net.threshold_domain(i).contains(t)) {
      throw UsageError("node " + std::to_string(i) + " has no threshold for '" + o.product + "'");
    }
    theta.push_back(in.net.threshold(i, t));
  }
  const auto cert = check_well_structured(in.net.graph(), theta);
  Report r = yes_no(cert.has_value(), "graph is well-structured for " + o.product,
                    "graph is not well-structured for " + o.product);
  r.result["well_structured"] = cert.has_value();
  if (cert) {
    r.result["levels"] = *cert;
  } else {
    r.result["reason"] = "some nodes never collect their threshold from lower levels";
  }
  return r;
}

Report cmd_reachable(const Input& in, const Options& o) {
  const ProductId top = need_product(in.net, o);
  const auto witness = reachability_witness(in.net, top, o.single_events);
  Report r = yes_no(witness.has_value(), "[" + o.product + "] is reachable", "[" + o.product + "] is not reachable");
  r.result["reachable"] = witness.has_value();
  if (witness) {
    r.result["witness"] = trace_json(in.net, *witness);
  } else if (!detail::offered_everywhere(in.net, top)) {
    r.result["reason"] = "some node does not offer " + o.product;
  } else {
    r.result["reason"] = "derived graph is not well-structured for " + o.product;
  }
  return r;
}

Report cmd_unavoidable(const Input& in, const Options& o) {
  const ProductId top = need_product(in.net, o);
  const bool value = is_unavoidable_all(in.net, top);
  Report r = yes_no(value, "[" + o.product + "] is unavoidable", "[" + o.product + "] is avoidable");
  r.result["unavoidable"] = value;
  if (value) {
    r.result["witness"] = trace_json(in.net, *reachability_witness(in.net, top, o.single_events));
    return r;
  }
  for (NodeId i = 0; i < in.net.node_count(); ++i) {
    if (!in.net.graph().has_in_neighbors(i) && in.net.availability(i) != ProductSet::single(top)) {
      r.result["reason"] = "node " + std::to_string(i) + " has no in-neighbours and has not adopted " + o.product;
      r.result["node"] = i;
      return r;
    }
  }
  r.result["reason"] = "[" + o.product + "] is not reachable";
  return r;
}

Report cmd_unique(const Input& in, const Options&) {
  const ContractionResult c = contraction_sequence(in.net);
  Report r;
  json v;
  if (std::holds_alternative<UniqueOutcome>(c.verdict)) {
    v["kind"] = "UniqueOutcome";
    r.summary = "unique outcome";
    r.status = kYes;
  } else if (const auto* m = std::get_if<AmbivalentMultiAdopt>(&c.verdict)) {
    v["kind"] = "AmbivalentMultiAdopt";
    v["node"] = m->node;
    v["products"] = product_list(in.net, m->products);
    r.summary = "several outcomes: node " + std::to_string(m->node) + " can adopt more than one product";
    r.status = kNo;
  } else {
    const auto& s = std::get<AmbivalentSwitch>(c.verdict);
    v["kind"] = "AmbivalentSwitch";
    v["node"] = s.node;
    v["from"] = in.net.product_name(s.from);
    v["to"] = in.net.product_name(s.to);
    r.summary = "several outcomes: node " + std::to_string(s.node) + " can switch from " +
                in.net.product_name(s.from) + " to " + in.net.product_name(s.to);
    r.status = kNo;
  }
  r.result["unique"] = c.unique();
  r.result["verdict"] = v;
  r.result["trace"] = trace_json(in.net, c.trace);
  r.result["terminal"] = availability_json(c.terminal);
  return r;
}

// Some final network with p(i) matching `pred`, from the oracle.
template <class Pred>
std::optional<Network> oracle_final(const Network& net, std::size_t budget, Pred pred) {
  for (const Network& f : enumerate(net, budget).finals) {
    if (pred(f)) return f;
  }
  return std::nullopt;
}

Report cmd_adoption(const Input& in, const Options& o) {
  const Network& net = in.net;
  const NodeId i = need_node(net, o);
  const std::string who = "node " + std::to_string(i);
  Report r;
  switch (o.adoption_kind) {
    case 1: {
      need_exhaustive(o, "ADOPTION 1");
      const Decision d = adoption1(net, i, o.budget);
      r = yes_no(d.value, who + " adopts some product in every final network",
                 who + " stays unadopted in some final network");
      r.result["exhaustive"] = true;
      if (!d.value) {
        const auto f = oracle_final(net, o.budget, [&](const Network& x) { return !x.availability(i).is_singleton(); });
        r.result["witness"] = availability_json(*f);
      }
      r.result["value"] = d.value;
      break;
    }
    case 2: {
      const ProductId t = need_product(net, o);
      if (net.product_count() != 2) need_exhaustive(o, "ADOPTION 2 with more than two products");
      const Decision d = adoption2(net, i, t, o.budget);
      r = yes_no(d.value, who + " adopts " + o.product + " in every final network",
                 who + " avoids " + o.product + " in some final network");
      r.result["value"] = d.value;
      r.result["exhaustive"] = d.exhaustive;
      if (!d.value) {
        if (d.exhaustive) {
          const auto f = oracle_final(net, o.budget,
                                      [&](const Network& x) { return x.availability(i) != ProductSet::single(t); });
          r.result["witness"] = availability_json(*f);
        } else {
          const ProductId other = t == 0 ? 1 : 0;
          const Network worst = complete_to_final(product_closure(product_closure(net, other), t)).network;
          r.result["witness"] = availability_json(worst);
        }
      }
      break;
    }
    case 3:
    case 4: {
      ProductSet candidates = net.availability(i);
      if (o.adoption_kind == 4) candidates = ProductSet::single(need_product(net, o));
      std::optional<ProductId> found;
      for (ProductId t : candidates) {
        if (adoption4_possible_given(net, i, t)) {
          found = t;
          break;
        }
      }
      if (o.adoption_kind == 3) {
        r = yes_no(found.has_value(), who + " can adopt some product", who + " can adopt no product");
      } else {
        r = yes_no(found.has_value(), who + " can adopt " + o.product, who + " cannot adopt " + o.product);
      }
      r.result["value"] = found.has_value();
      r.result["exhaustive"] = false;
      if (found) {
        r.result["product"] = net.product_name(*found);
        r.result["witness"] = availability_json(complete_to_final(product_closure(net, *found)).network);
      } else {
        r.result["reason"] = "the product closure never reaches " + who;
      }
      break;
    }
    default:
      throw UsageError("adoption kind must be 1, 2, 3 or 4");
  }
  return r;
}

Report cmd_max_spread(const Input& in, const Options& o) {
  const ProductId t = need_product(in.net, o);
  const SpreadResult s = max_adoption(in.net, t);
  Report r;
  r.summary = "at most " + std::to_string(s.count) + " nodes adopt " + o.product;
  r.result["count"] = s.count;
  r.result["witness"] = availability_json(s.witness);
  return r;
}

Report cmd_min_spread(const Input& in, const Options& o) {
  const ProductId t = need_product(in.net, o);
  if (in.net.product_count() != 2) need_exhaustive(o, "MIN-ADOPTION with other than two products");
  const SpreadDecision s = min_adoption(in.net, t, o.budget);
  Report r;
  r.summary = "at least " + std::to_string(s.result.count) + " nodes adopt " + o.product;
  r.result["count"] = s.result.count;
  r.result["exhaustive"] = s.exhaustive;
  r.result["witness"] = availability_json(s.result.witness);
  return r;
}

// ---- oracle ----------------------------------------------------------------

Report cmd_oracle_enumerate(const Input& in, const Options& o) {
  const FinalSet fs = enumerate(in.net, EnumerateOptions{o.budget, o.multi_event, false});
  Report r;
  json finals = json::array();
  for (const Network& f : fs.finals) finals.push_back({{"availability", availability_json(f)}});
  r.result["finals"] = finals;
  r.result["final_count"] = fs.size();
  r.result["reachable_count"] = fs.reachable_count;
  r.summary = std::to_string(fs.size()) + " final networks, " + std::to_string(fs.reachable_count) +
              " reachable states";
  return r;
}

Report cmd_oracle_final(const Input& in, const Options& o) {
  need_exhaustive(o, "FINAL");
  const auto f = oracle_final(in.net, o.budget, [](const Network& x) {
    return std::all_of(x.availability().begin(), x.availability().end(), [](ProductSet p) { return p.is_singleton(); });
  });
  Report r = yes_no(f.has_value(), "a final network with every node adopted exists",
                    "every final network leaves some node unadopted");
  r.result["value"] = f.has_value();
  if (f) r.result["witness"] = availability_json(*f);
  return r;
}

Report cmd_oracle_min(const Input& in, const Options& o) {
  need_exhaustive(o, "exact MIN-ADOPTION");
  const ProductId t = need_product(in.net, o);
  const std::size_t count = min_adoption_exact(in.net, t, o.budget);
  Report r;
  r.result["count"] = count;
  r.summary = "at least " + std::to_string(count) + " nodes adopt " + o.product;
  return r;
}

// ---- transforms ------------------------------------------------------------

Transformed run_transform(const Network& net, const std::string& kind, std::size_t cap) {
  if (kind == "general") return transform_general(net, cap);
  if (kind == "equitable") {
    try {
      return transform_equitable(net);
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("transform kind must be 'general' or 'equitable'");
}

const char* kind_name(AuxKind k) {
  switch (k) {
    case AuxKind::Subset: return "subset";
    case AuxKind::Product: return "product";
    case AuxKind::Blocker: return "blocker";
  }
  return "?";
}

void write_output(const Options& o, const std::string& document) {
  if (o.output.empty()) return;
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + o.output + "'");
  out << document;
}

Report cmd_transform(const Input& in, const Options& o, const std::string& kind) {
  const Transformed tr = run_transform(in.net, kind, o.cap);
  Report r;
  json aux = json::array();
  for (const AuxNode& a : tr.map.aux) {
    aux.push_back({{"id", a.id},
                   {"kind", kind_name(a.kind)},
                   {"product", tr.network.product_name(a.product)},
                   {"target", a.target},
                   {"subset", a.subset}});
  }
  const std::string document = serialize(tr.network);
  write_output(o, document);
  r.result["original_nodes"] = tr.map.original_count;
  r.result["nodes"] = tr.network.node_count();
  r.result["neutral_product"] = tr.network.product_name(tr.map.neutral);
  r.result["aux"] = aux;
  r.result["document"] = document;
  r.summary = kind + " transform: " + std::to_string(in.net.node_count()) + " -> " +
              std::to_string(tr.network.node_count()) + " nodes";
  return r;
}

Report cmd_transform_check(const Input& in, const Options& o) {
  need_exhaustive(o, "transform check");
  const Transformed tr = run_transform(in.net, o.kind, o.cap);
  const bool ok = check_correspondence(in.net, tr.network, tr.map, o.budget);
  Report r = yes_no(ok, "final networks correspond under the " + o.kind + " transform",
                    "final networks do NOT correspond under the " + o.kind + " transform");
  r.result["correspond"] = ok;
  r.result["nodes"] = tr.network.node_count();
  return r;
}

// ---- generators ------------------------------------------------------------

std::vector<Rational> parse_numbers(const std::string& text) {
  if (text.empty()) throw UsageError("--numbers is required (comma-separated rationals)");
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception& e) {
      throw UsageError(std::string("--numbers: ") + e.what());
    }
  }
  return out;
}

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

int cmd_gen(const std::string& which, const Options& o) {
  std::ostringstream params;
  std::optional<Gadget> gadget;
  std::optional<Network> plain;
  if (which == "final") {
    gadget = gen_final_gadget(parse_numbers(o.numbers));
    params << "final " << o.numbers;
  } else if (which == "adoption1") {
    gadget = gen_adoption1_gadget(parse_numbers(o.numbers));
    params << "adoption1 " << o.numbers;
  } else if (which == "adoption2") {
    gadget = gen_adoption2_gadget(parse_numbers(o.numbers), parse_rational_flag("--eps", o.eps));
    params << "adoption2 " << o.numbers << ' ' << o.eps;
  } else if (which == "min") {
    gadget = gen_min_adoption_gadget(parse_numbers(o.numbers), parse_rational_flag("--eps", o.eps), o.chain);
    params << "min " << o.numbers << ' ' << o.eps << ' ' << o.chain;
  } else if (which == "switch") {
    gadget = gen_switch_witness();
    params << "switch";
  } else {
    RandomSpec spec;
    spec.nodes = o.nodes;
    spec.products = o.products;
    spec.density = o.density;
    spec.equitable = o.equitable;
    spec.theta_min = parse_rational_flag("--theta-min", o.theta_min);
    spec.theta_max = parse_rational_flag("--theta-max", o.theta_max);
    spec.seed = o.seed;
    spec.adopted_fraction = o.adopted_fraction;
    spec.isolated_adopted = o.isolated_adopted;
    plain = gen_random(spec);
    params << "random " << o.nodes << ' ' << o.products << ' ' << o.density << ' ' << o.equitable << ' '
           << o.theta_min << ' ' << o.theta_max << ' ' << o.seed << ' ' << o.adopted_fraction << ' '
           << o.isolated_adopted;
  }
  const Network& net = gadget ? gadget->network : *plain;
  const std::string document = serialize(net);
  write_output(o, document);
  Report r;
  r.result["document"] = document;
  r.result["nodes"] = net.node_count();
  r.result["edges"] = net.graph().edge_count();
  if (gadget) {
    json roles = json::object();
    for (const auto& [name, id] : gadget->roles) roles[name] = id;
    r.result["roles"] = roles;
  }
  r.summary = "generated " + which + " network with " + std::to_string(net.node_count()) + " nodes";
  return emit("gen " + which, content_hash(params.str()), r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-product threshold diffusion analysis"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "network document")->required(); };
  auto add_product = [&](CLI::App* sub) { sub->add_option("--product,-p", o.product, "product name"); };
  auto add_node = [&](CLI::App* sub) { sub->add_option("--node,-n", o.node, "node id"); };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "state budget for exhaustive enumeration")->check(CLI::PositiveNumber);
  };
  auto add_exhaustive = [&](CLI::App* sub) {
    sub->add_flag("--exhaustive", o.exhaustive, "accept exponential-time exhaustive search");
  };

  std::string command;
  std::function<Report(const Input&)> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Report(const Input&)> fn) {
    sub->callback([&, name, fn] {
      command = name;
      action = fn;
    });
  };

  auto* ws = app.add_subcommand("well-structured", "check (θ,t)-well-structuredness of the graph");
  add_file(ws);
  add_product(ws);
  bind(ws, "well-structured", [&](const Input& in) { return cmd_well_structured(in, o); });

  auto* reach = app.add_subcommand("reachable", "can the product spread to every node?");
  add_file(reach);
  add_product(reach);
  reach->add_flag("--single-events", o.single_events, "witness with one adoption per step");
  bind(reach, "reachable", [&](const Input& in) { return cmd_reachable(in, o); });

  auto* unav = app.add_subcommand("unavoidable", "must the product spread to every node?");
  add_file(unav);
  add_product(unav);
  unav->add_flag("--single-events", o.single_events, "witness with one adoption per step");
  bind(unav, "unavoidable", [&](const Input& in) { return cmd_unavoidable(in, o); });

  auto* uniq = app.add_subcommand("unique-outcome", "does the network have exactly one final network?");
  add_file(uniq);
  bind(uniq, "unique-outcome", [&](const Input& in) { return cmd_unique(in, o); });

  auto* adopt = app.add_subcommand("adoption", "node adoption queries 1-4");
  adopt->add_option("kind", o.adoption_kind, "1: unavoidable some, 2: unavoidable given, 3: possible some, 4: possible given")
      ->required()
      ->check(CLI::Range(1, 4));
  add_file(adopt);
  add_node(adopt);
  add_product(adopt);
  add_budget(adopt);
  add_exhaustive(adopt);
  bind(adopt, "adoption", [&](const Input& in) { return cmd_adoption(in, o); });

  auto* maxs = app.add_subcommand("max-spread", "largest number of adopters over final networks");
  add_file(maxs);
  add_product(maxs);
  bind(maxs, "max-spread", [&](const Input& in) { return cmd_max_spread(in, o); });

  auto* mins = app.add_subcommand("min-spread", "smallest number of adopters over final networks");
  add_file(mins);
  add_product(mins);
  add_budget(mins);
  add_exhaustive(mins);
  bind(mins, "min-spread", [&](const Input& in) { return cmd_min_spread(in, o); });

  auto* oracle = app.add_subcommand("oracle", "exhaustive enumeration of the reduction state space");
  oracle->require_subcommand(1);
  auto* oe = oracle->add_subcommand("enumerate", "list every final network");
  add_file(oe);
  add_budget(oe);
  oe->add_flag("--multi-event", o.multi_event, "explore simultaneous adoption steps");
  bind(oe, "oracle enumerate", [&](const Input& in) { return cmd_oracle_enumerate(in, o); });
  auto* of = oracle->add_subcommand("final", "does a final network with every node adopted exist?");
  add_file(of);
  add_budget(of);
  add_exhaustive(of);
  bind(of, "oracle final", [&](const Input& in) { return cmd_oracle_final(in, o); });
  auto* om = oracle->add_subcommand("min", "exact minimum spread");
  add_file(om);
  add_product(om);
  add_budget(om);
  add_exhaustive(om);
  bind(om, "oracle min", [&](const Input& in) { return cmd_oracle_min(in, o); });

  auto* transform = app.add_subcommand("transform", "product-independent threshold transforms");
  transform->require_subcommand(1);
  for (const char* kind : {"general", "equitable"}) {
    auto* t = transform->add_subcommand(kind, std::string(kind) + " transform");
    add_file(t);
    t->add_option("--cap", o.cap, "auxiliary node cap");
    t->add_option("--output,-o", o.output, "write the transformed document here");
    const std::string k = kind;
    bind(t, std::string("transform ") + kind, [&, k](const Input& in) { return cmd_transform(in, o, k); });
  }
  auto* tc = transform->add_subcommand("check", "compare final networks before and after a transform");
  add_file(tc);
  tc->add_option("--kind", o.kind, "general or equitable")->check(CLI::IsMember({"general", "equitable"}));
  tc->add_option("--cap", o.cap, "auxiliary node cap");
  add_budget(tc);
  add_exhaustive(tc);
  bind(tc, "transform check", [&](const Input& in) { return cmd_transform_check(in, o); });

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  std::string gen_kind;
  for (const char* kind : {"final", "adoption1", "adoption2", "min", "switch", "random"}) {
    auto* g = gen->add_subcommand(kind, std::string(kind) + " network");
    const std::string k = kind;
    if (k != "switch" && k != "random") {
      g->add_option("--numbers", o.numbers, "PARTITION numbers, comma-separated rationals")->required();
    }
    if (k == "adoption2" || k == "min") g->add_option("--eps", o.eps, "eps in (0,1/2)");
    if (k == "min") g->add_option("--chain", o.chain, "chain length M")->check(CLI::PositiveNumber);
    if (k == "random") {
      g->add_option("--nodes", o.nodes, "node count");
      g->add_option("--products", o.products, "product count");
      g->add_option("--density", o.density, "edge probability");
      g->add_flag("--equitable", o.equitable, "weights 1/|N(i)|");
      g->add_option("--theta-min", o.theta_min, "smallest threshold");
      g->add_option("--theta-max", o.theta_max, "largest threshold");
      g->add_option("--seed", o.seed, "random seed");
      g->add_option("--adopted-fraction", o.adopted_fraction, "share of pre-adopted nodes");
      g->add_flag("--isolated-adopted", o.isolated_adopted, "pre-adopt nodes without in-neighbours");
    }
    g->add_option("--output,-o", o.output, "also write the document here");
    g->callback([&, k] { gen_kind = k; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (!gen_kind.empty()) return cmd_gen(gen_kind, o);
    if (!action) {
      std::cerr << app.help();
      return kUsage;
    }
    const Input in = load(o.file);
    return emit(command, in.hash, action(in));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << " (" << e.consumed() << " consumed)\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
