package a;

import b.B1;
import b.B2;
import c.C1;
import c.*;
import java.util.List;

// import b.Ghost; (commented out, must not count)

public class A1 {
    B1 first;
    B2 second;
    C1 third;
    List<String> names;

    String describe() {
        return "uses b.Fake and c.Fake only inside this string";
    }
}
