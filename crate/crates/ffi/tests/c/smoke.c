/* Decomposes and draws V8 through the C ABI; exits nonzero on any mismatch. */
#include <stdio.h>
#include <string.h>

#include "plandec.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      const char *e = plandec_last_error();                           \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond, \
              e ? e : "no error");                                    \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  const size_t edges[] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6,
                          6, 7, 0, 7, 0, 4, 1, 5, 2, 6, 3, 7};
  PlandecGraph *g = NULL;
  CHECK(plandec_graph_new(8, edges, 12, &g) == PLANDEC_STATUS_OK);
  CHECK(plandec_graph_edge_count(g) == 12);

  PlandecDecomposition *d = NULL;
  CHECK(plandec_decompose(g, PLANDEC_CLASS_K5, false, &d) == PLANDEC_STATUS_OK);
  CHECK(plandec_decomposition_width(d) == 2);
  CHECK(plandec_decomposition_validate(d) == PLANDEC_STATUS_OK);

  PlandecDrawing *dr = NULL;
  bool holds = false;
  CHECK(plandec_draw(g, PLANDEC_CLASS_K5, 1, &dr) == PLANDEC_STATUS_OK);
  CHECK(plandec_drawing_certified(dr, &holds) == PLANDEC_STATUS_OK && holds);

  char *svg = NULL;
  CHECK(plandec_drawing_to_svg(dr, &svg) == PLANDEC_STATUS_OK);
  CHECK(strncmp(svg, "<svg", 4) == 0);
  plandec_string_free(svg);

  CHECK(plandec_graph_parse("3 1\n0 9\n", &g) != PLANDEC_STATUS_OK);
  CHECK(plandec_last_error() != NULL);

  plandec_drawing_free(dr);
  plandec_decomposition_free(d);
  plandec_graph_free(g);
  printf("ok %s\n", plandec_version());
  return 0;
}
