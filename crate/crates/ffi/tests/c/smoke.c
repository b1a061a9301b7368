#include <stdio.h>
#include <string.h>

#include "multideg.h"

static int fail(const char *what) {
    const char *msg = md_last_error();
    fprintf(stderr, "%s: %s\n", what, msg ? msg : "(no message)");
    return 1;
}

int main(void) {
    MdTable *table = NULL;
    char *s = NULL;
    if (md_table_new(10, &table) != MdStatus_Ok) return fail("table");
    if (md_table_cone_degree(table, &s) != MdStatus_Ok) return fail("cone degree");
    int ok = strcmp(s, "135135") == 0;
    md_string_free(s);
    md_table_free(table);
    if (!ok) return fail("cone degree value");

    MdParkingFunction *pf = NULL, *big = NULL, *back = NULL;
    size_t point = 0;
    if (md_pf_from_json("{\"n\":3,\"columns\":[[1,3],[],[2]]}", &pf) != MdStatus_Ok) return fail("parse");
    if (md_pf_insert(pf, 2, MdInsertion_Iota, &big) != MdStatus_Ok) return fail("insert");
    if (md_pf_remove(big, MdRemoval_Nu, &back, &point) != MdStatus_Ok) return fail("remove");
    if (point != 2 || md_pf_size(back) != 3) return fail("round trip");
    md_pf_free(pf);
    md_pf_free(big);
    md_pf_free(back);

    if (md_pf_from_json("{\"n\":2,\"columns\":[[],[1,2]]}", &pf) != MdStatus_Domain) return fail("reject");
    printf("ok\n");
    return 0;
}
