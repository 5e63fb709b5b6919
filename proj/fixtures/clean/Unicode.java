package fixtures.lexical;

public class Unicode {
    String greeting = "héllo wörld ✓";
    int café = 1;
    int ŝpace = café + 1;

    char dollar() {
        return '€';
    }
}
