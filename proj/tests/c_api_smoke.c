/* Compiled as C: exercises the public header without any C++. */
#include "catpart/catpart.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(void) {
  catpart_context* ctx = catpart_context_create();
  EXPECT(ctx != NULL);

  char* s = NULL;
  EXPECT(catpart_count_catalan(ctx, 4, &s) == CATPART_OK);
  EXPECT(s && strcmp(s, "14") == 0);
  catpart_string_free(s);
  EXPECT(catpart_count_ballot(ctx, 2, 1, &s) == CATPART_OK);
  EXPECT(s && strcmp(s, "5") == 0);
  catpart_string_free(s);

  catpart_partition* mu = NULL;
  EXPECT(catpart_partition_parse_in_pnk(ctx, "7,6,5,3,3,3,3,3,3,1", 0, &mu) == CATPART_OK);
  int b = 0, k = 0;
  catpart_partition* core = NULL;
  EXPECT(catpart_square_witness(ctx, mu, &b, &k, &core) == CATPART_OK);
  EXPECT(b == 3 && k == 3);
  EXPECT(catpart_partition_render(ctx, core, CATPART_FORMAT_TEXT, &s) == CATPART_OK);
  EXPECT(s && strcmp(s, "3,1,1\n") == 0);
  catpart_string_free(s);

  catpart_family* family = NULL;
  EXPECT(catpart_family_square(ctx, core, 10, &family) == CATPART_OK);
  EXPECT(catpart_family_size(family) == 2 * 1430);
  catpart_family_destroy(family);

  /* errors come back as codes with a message */
  catpart_partition* bad = NULL;
  EXPECT(catpart_partition_parse(ctx, "1,2", 0, &bad) == CATPART_ERR_INVALID_ARGUMENT);
  EXPECT(bad == NULL);
  EXPECT(strlen(catpart_last_error(ctx)) > 0);
  catpart_pair* pair = NULL;
  EXPECT(catpart_pair_from_partition(ctx, mu, &pair) == CATPART_ERR_DOMAIN);
  catpart_context_set_cap(ctx, 10);
  EXPECT(catpart_family_omega(ctx, 3, 6, &family) == CATPART_ERR_CAP_EXCEEDED);
  catpart_context_set_cap(ctx, catpart_default_cap());
  EXPECT(catpart_count_catalan(ctx, 1, NULL) == CATPART_ERR_INVALID_ARGUMENT);
  EXPECT(strcmp(catpart_status_name(CATPART_ERR_CAP_EXCEEDED), "enumeration cap exceeded") == 0);

  /* pair round trip through DOT */
  catpart_partition* mu14 = NULL;
  EXPECT(catpart_partition_parse_in_pnk(ctx, "11,11,11,11,10,9,9,9,9,9,9,7,7,3", 0, &mu14) == CATPART_OK);
  EXPECT(catpart_pair_from_partition(ctx, mu14, &pair) == CATPART_OK);
  EXPECT(catpart_pair_render(ctx, pair, CATPART_FORMAT_DOT, &s) == CATPART_OK);
  catpart_pair* again = NULL;
  EXPECT(catpart_pair_parse(ctx, s, &again) == CATPART_OK);
  EXPECT(catpart_pair_equal(pair, again));
  catpart_string_free(s);
  catpart_partition* back = NULL;
  EXPECT(catpart_pair_to_partition(ctx, again, &back) == CATPART_OK);
  EXPECT(catpart_partition_equal(back, mu14));

  catpart_report* report = NULL;
  EXPECT(catpart_verify(ctx, 3, 1, NULL, &report) == CATPART_OK);
  EXPECT(catpart_report_passed(report));
  EXPECT(catpart_report_suite_count(report) == 23);
  EXPECT(strcmp(catpart_report_suite_name(report, 0), "gamma-involution") == 0);
  EXPECT(catpart_report_suite_name(report, 23) == NULL);

  catpart_report_destroy(report);
  catpart_partition_destroy(back);
  catpart_pair_destroy(again);
  catpart_pair_destroy(pair);
  catpart_partition_destroy(mu14);
  catpart_partition_destroy(core);
  catpart_partition_destroy(mu);
  catpart_context_destroy(ctx);

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  return failures ? 1 : 0;
}
