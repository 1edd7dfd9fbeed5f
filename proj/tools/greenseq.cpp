#include <iostream>

#include "greenseq/cli.hpp"
#include "greenseq/explorer_http.hpp"

int main(int argc, char** argv) {
  auto serve = [](const std::string& host, int port, std::ostream& out) {
    greenseq::explorer::SessionStore store;
    httplib::Server server;
    greenseq::explorer::register_routes(server, store);
    out << "explorer service listening on http://" << host << ':' << port << std::endl;
    if (!server.listen(host, port)) {
      std::cerr << "error: cannot listen on " << host << ':' << port << '\n';
      return 2;
    }
    return 0;
  };
  return greenseq::cli::run(argc, argv, std::cout, std::cerr, serve);
}
