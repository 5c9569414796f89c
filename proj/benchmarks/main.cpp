#include <benchmark/benchmark.h>

// The packaged benchmark_main archive carries LTO bytecode tied to one
// compiler build, so the entry point is compiled here instead.
BENCHMARK_MAIN();
