#include "polarpath/slp.hpp"

#include <nlohmann/json.hpp>

namespace polarpath {

using json = nlohmann::json;

Slp::Slp(int input_count, std::vector<Instr> instrs, std::vector<int32_t> outputs)
    : n_(input_count), ins_(std::move(instrs)), outs_(std::move(outputs)) {
  if (outs_.empty()) throw InvalidInput("slp: outputs must be non-empty");
  int32_t idx = 0;
  for (auto& it : ins_) {
    ++idx;
    if (it.kind != OpKind::Const) {
      if (it.a >= idx || it.b >= idx || it.a < -n_ + 1 || it.b < -n_ + 1)
        throw InvalidInput("slp: operand index out of range");
      ++oplen_;
    }
  }
  for (auto r : outs_)
    if (r > (int32_t)ins_.size() || r < -n_ + 1)
      throw InvalidInput("slp: output index out of range");
}

std::vector<Rational> Slp::eval_rational(const std::vector<Rational>& point) const {
  SRationalRing ring;
  return eval(ring, point);
}

std::vector<MultiPoly> slp_to_polys(const Slp& slp) {
  SPolyRing ring{slp.input_count()};
  std::vector<MultiPoly> vars;
  for (int i = 0; i < slp.input_count(); ++i)
    vars.push_back(MultiPoly::variable(slp.input_count(), i, Rational(1)));
  return slp.eval(ring, vars);
}

Slp slp_from_polys(const std::vector<MultiPoly>& fs) {
  if (fs.empty()) throw InvalidInput("empty system");
  int n = fs[0].nvars();
  for (auto& f : fs)
    if (f.nvars() != n) throw InvalidInput("slp_from_polys: mixed variable counts");
  SlpBuilder b(n);
  for (auto& f : fs) {
    if (f.is_zero()) {
      b.mark_output(b.constant(Rational(0)));
      continue;
    }
    int32_t acc = 0;
    bool have_acc = false;
    for (auto& t : f.terms()) {
      int32_t term;
      bool have_term = false;
      if (t.c != Rational(1) || t.m.is_one()) {
        term = b.constant(t.c);
        have_term = true;
      }
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < t.m.e[i]; ++k) {
          term = have_term ? b.mul(term, b.input(i)) : b.input(i);
          have_term = true;
        }
      acc = have_acc ? b.add(acc, term) : term;
      have_acc = true;
    }
    b.mark_output(acc);
  }
  return b.build();
}

Slp phigen(const std::vector<Rational>& alpha) {
  if (alpha.size() % 2 != 0 || alpha.empty())
    throw InvalidInput("phigen: alpha must have length 2n");
  int n = static_cast<int>(alpha.size()) / 2;
  SlpBuilder b(n);
  // theta = sum x_k^2 : n muls + n-1 adds
  int32_t theta = 0;
  for (int k = 0; k < n; ++k) {
    int32_t sq = b.mul(b.input(k), b.input(k));
    theta = k ? b.add(theta, sq) : sq;
  }
  // linear part of phi_1 : n muls + n-1 adds
  int32_t lin1 = 0;
  for (int k = 0; k < n; ++k) {
    int32_t t = b.mul(b.constant(alpha[k]), b.input(k));
    lin1 = k ? b.add(lin1, t) : t;
  }
  int32_t phi1 = b.add(theta, lin1);
  // phi_2 : n muls + n-1 adds
  int32_t phi2 = 0;
  for (int k = 0; k < n; ++k) {
    int32_t t = b.mul(b.constant(alpha[n + k]), b.input(k));
    phi2 = k ? b.add(phi2, t) : t;
  }
  b.mark_output(phi1);
  b.mark_output(phi2);
  return b.build();
}

Slp inc_slp(const Slp& gamma, const Slp& gamma_phi, int i) {
  if (gamma.input_count() != gamma_phi.input_count())
    throw InvalidInput("inc_slp: variable counts differ");
  if (i < 1 || i > (int)gamma_phi.output_count())
    throw InvalidInput("inc_slp: i exceeds the phi output count");
  int n = gamma.input_count();
  int N = n + i;
  std::vector<Slp::Instr> ins;
  ins.reserve(gamma_phi.instruction_count() + gamma.instruction_count() + i);
  // variable layout: (e_1..e_i, x_1..x_n); old x-references keep their value
  // since x_k's reference k-n is unchanged when both n and position shift by i
  auto import = [&](const Slp& src, int32_t offset) {
    for (auto& it : src.instructions()) {
      Slp::Instr copy = it;
      if (copy.kind != Slp::OpKind::Const) {
        if (copy.a >= 1) copy.a += offset;
        if (copy.b >= 1) copy.b += offset;
      }
      ins.push_back(std::move(copy));
    }
  };
  import(gamma_phi, 0);
  int32_t phi_offset = 0;
  int32_t gamma_offset = static_cast<int32_t>(gamma_phi.instruction_count());
  import(gamma, gamma_offset);

  std::vector<int32_t> outs;
  for (auto r : gamma.outputs()) outs.push_back(r >= 1 ? r + gamma_offset : r);
  for (int j = 0; j < i; ++j) {
    int32_t phi_ref = gamma_phi.outputs()[j];
    if (phi_ref >= 1) phi_ref += phi_offset;
    int32_t e_ref = (j + 1) - N;  // input e_{j+1}
    ins.push_back({Slp::OpKind::Sub, Rational(0), phi_ref, e_ref});
    outs.push_back(static_cast<int32_t>(ins.size()));
  }
  return Slp(N, std::move(ins), std::move(outs));
}

Slp jac_slp(const Slp& gamma) {
  int n = gamma.input_count();
  size_t E = gamma.length();
  std::vector<Slp::Instr> ins(gamma.instructions());
  std::vector<int32_t> outs(gamma.outputs());

  SlpBuilder ext(n);  // used only for ref bookkeeping of appended instrs
  auto append_const = [&](const Rational& c) -> int32_t {
    ins.push_back({Slp::OpKind::Const, c, 0, 0});
    return static_cast<int32_t>(ins.size());
  };
  auto append_op = [&](Slp::OpKind k, int32_t a, int32_t b) -> int32_t {
    ins.push_back({k, Rational(0), a, b});
    return static_cast<int32_t>(ins.size());
  };

  size_t base_count = gamma.instruction_count();
  for (size_t k = 0; k < gamma.outputs().size(); ++k) {
    size_t ops_before = 0;
    for (auto& it : ins)
      if (it.kind != Slp::OpKind::Const) ++ops_before;

    // adjoint refs: 0 means "no contribution yet"
    std::vector<int32_t> adj(base_count + 1, 0);      // adj[i] for instr i (1-based)
    std::vector<int32_t> adj_in(n, 0);                // adjoints of inputs
    int32_t root = gamma.outputs()[k];
    int32_t one_ref = append_const(Rational(1));
    if (root >= 1)
      adj[root] = one_ref;
    else
      adj_in[root + n - 1] = one_ref;

    auto accumulate = [&](int32_t target, int32_t contrib) {
      // target: instruction ref (>=1) or input ref (<=0)
      if (target >= 1) {
        adj[target] = adj[target] ? append_op(Slp::OpKind::Add, adj[target], contrib) : contrib;
      } else {
        int v = target + n - 1;
        adj_in[v] = adj_in[v] ? append_op(Slp::OpKind::Add, adj_in[v], contrib) : contrib;
      }
    };

    for (int32_t idx = static_cast<int32_t>(base_count); idx >= 1; --idx) {
      if (adj[idx] == 0) continue;
      const Slp::Instr it = ins[idx - 1];
      int32_t w = adj[idx];
      switch (it.kind) {
        case Slp::OpKind::Const:
          break;
        case Slp::OpKind::Add:
          accumulate(it.a, w);
          accumulate(it.b, w);
          break;
        case Slp::OpKind::Sub: {
          accumulate(it.a, w);
          // -w via (const 0) - w would cost an op; use 0-const minus
          int32_t zero = append_const(Rational(0));
          int32_t neg = append_op(Slp::OpKind::Sub, zero, w);
          accumulate(it.b, neg);
          break;
        }
        case Slp::OpKind::Mul: {
          int32_t ca = append_op(Slp::OpKind::Mul, w, it.b);
          accumulate(it.a, ca);
          int32_t cb = append_op(Slp::OpKind::Mul, w, it.a);
          accumulate(it.b, cb);
          break;
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (adj_in[v] == 0) adj_in[v] = append_const(Rational(0));
      outs.push_back(adj_in[v]);
    }
    size_t ops_after = 0;
    for (auto& it : ins)
      if (it.kind != Slp::OpKind::Const) ++ops_after;
    if (ops_after - ops_before > 4 * E)
      throw ResourceLimit("jac_slp: adjoint op budget exceeded");
  }
  (void)ext;
  return Slp(n, std::move(ins), std::move(outs));
}

std::string Slp::to_json() const {
  json j;
  j["inputCount"] = n_;
  json arr = json::array();
  for (auto& it : ins_) {
    if (it.kind == OpKind::Const) {
      arr.push_back({{"const", rational_to_string(it.cval)}});
    } else {
      const char* op = it.kind == OpKind::Add ? "+" : it.kind == OpKind::Sub ? "-" : "*";
      arr.push_back({{"op", op}, {"a", it.a}, {"b", it.b}});
    }
  }
  j["instructions"] = std::move(arr);
  j["outputs"] = outs_;
  return j.dump();
}

Slp Slp::from_json(const std::string& text) {
  json j = json::parse(text);
  int n = j.at("inputCount").get<int>();
  std::vector<Instr> ins;
  for (auto& e : j.at("instructions")) {
    if (e.contains("const")) {
      ins.push_back({OpKind::Const, parse_rational(e["const"].get<std::string>()), 0, 0});
    } else {
      std::string op = e.at("op").get<std::string>();
      OpKind k = op == "+" ? OpKind::Add : op == "-" ? OpKind::Sub : OpKind::Mul;
      if (op != "+" && op != "-" && op != "*")
        throw InvalidInput("slp json: unknown op " + op);
      ins.push_back({k, Rational(0), e.at("a").get<int32_t>(), e.at("b").get<int32_t>()});
    }
  }
  std::vector<int32_t> outs = j.at("outputs").get<std::vector<int32_t>>();
  return Slp(n, std::move(ins), std::move(outs));
}

}  // namespace polarpath
