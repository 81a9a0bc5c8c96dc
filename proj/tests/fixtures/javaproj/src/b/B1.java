package b;

import c.C1;

public class B1 {
    C1 helper;

    /* a.A1 mentioned in a comment must not count */
    public String name() {
        return "B1";
    }
}
