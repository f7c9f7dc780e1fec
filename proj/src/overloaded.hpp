#pragma once

namespace plift::detail {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

}  // namespace plift::detail
