#include "coha/var.hpp"

#include <charconv>

#include "coha/error.hpp"

namespace coha {

VarId VarId::x(int vertex, int slot) {
  if (vertex < 0 || vertex >= kMaxVertices || slot < 1 || slot > kMaxSlots)
    throw InvalidArgument("variable x(" + std::to_string(vertex) + "," + std::to_string(slot) +
                          ") outside supported range (vertex < " + std::to_string(kMaxVertices) +
                          ", slot <= " + std::to_string(kMaxSlots) + ")");
  return VarId(Kind::X, vertex, slot);
}

int VarId::index() const {
  switch (kind_) {
    case Kind::T1: return 0;
    case Kind::T2: return 1;
    case Kind::Hbar: return 2;
    case Kind::X: break;
  }
  return kParamCount + vertex_ * kMaxSlots + (slot_ - 1);
}

VarId VarId::from_index(int index) {
  if (index == 0) return t1();
  if (index == 1) return t2();
  if (index == 2) return hbar();
  int k = index - kParamCount;
  return x(k / kMaxSlots, k % kMaxSlots + 1);
}

std::string VarId::name() const {
  switch (kind_) {
    case Kind::T1: return "t1";
    case Kind::T2: return "t2";
    case Kind::Hbar: return "hbar";
    case Kind::X: break;
  }
  return "x:" + std::to_string(vertex_) + ":" + std::to_string(slot_);
}

VarId VarId::parse(const std::string& name) {
  if (name == "t1") return t1();
  if (name == "t2") return t2();
  if (name == "hbar") return hbar();
  if (name.size() > 2 && name.rfind("x:", 0) == 0) {
    auto colon = name.find(':', 2);
    if (colon != std::string::npos) {
      int v = -1, s = -1;
      auto r1 = std::from_chars(name.data() + 2, name.data() + colon, v);
      auto r2 = std::from_chars(name.data() + colon + 1, name.data() + name.size(), s);
      if (r1.ec == std::errc() && r2.ec == std::errc() && r1.ptr == name.data() + colon &&
          r2.ptr == name.data() + name.size())
        return x(v, s);
    }
  }
  throw InvalidArgument("unknown variable name: '" + name + "'");
}

}  // namespace coha
