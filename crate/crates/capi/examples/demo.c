/* Smoke test for the C header: build a model, count words, glue, repair.
 *
 *   cc demo.c -I../include -L../../../target/debug -llex_capi -lm && ./a.out
 */
#include <assert.h>
#include <stdio.h>
#include <string.h>

#include "lex.h"

int main(void) {
  LexModel *model = NULL;
  assert(lex_model_aspec(2, 2, &model) == LexOk);

  char *text = NULL;
  assert(lex_model_describe(model, &text) == LexOk);
  printf("model: %s\n", text);
  lex_string_free(text);

  assert(lex_model_count(model, 3, LexCountFormula, 1u << 20, &text) == LexOk);
  printf("|L_3| = %s\n", text);
  assert(strcmp(text, "56") == 0);
  lex_string_free(text);

  bool member = false;
  assert(lex_model_is_member(model, "2 -1 1", &member) == LexOk);
  printf("2 -1 1 member: %d\n", member);
  lex_model_free(model);

  const char *parts[2] = {"2", "-2 -2"};
  size_t max_distance = 0;
  assert(lex_repair_concatenation(2, 2, parts, 2, &text, &max_distance) == LexOk);
  printf("repaired: %s (max distance %zu)\n", text, max_distance);
  assert(max_distance <= 4);
  lex_string_free(text);

  LexCode *code = NULL;
  assert(lex_code_build(LexFamilyT, 2, 4, &code) == LexOk);
  assert(lex_code_repair(code, "0 1 1 0", &text) == LexOk);
  printf("code repair of 0 1 1 0: %s\n", text);
  lex_string_free(text);

  bool ok = false;
  assert(lex_code_verify_spanning(code, 1, 1u << 20, &ok) == LexOk && ok);
  lex_code_free(code);

  assert(lex_model_aws(1, NULL) == LexNullPointer);
  printf("status 2 reads: %s\n", lex_status_message(LexNullPointer));
  puts("all C checks passed");
  return 0;
}
