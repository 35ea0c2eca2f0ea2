/* The public header must compile as C. */
#include "blockinv/blockinv.h"

#include <stdio.h>
#include <string.h>

int main(void) {
  blockinv_params* p = NULL;
  char* kb = NULL;
  int ok;
  if (blockinv_params_gl3(1, 1, 6, &p) != BLOCKINV_OK) return 1;
  if (blockinv_params_invariants(p, &kb, NULL, NULL) != BLOCKINV_OK) return 1;
  ok = strcmp(kb, "270") == 0;
  printf("k(B) = %s\n", kb);
  blockinv_string_free(kb);
  blockinv_params_free(p);
  return ok ? 0 : 1;
}
