package fixtures.lexical;
public class NoFinalNewline {
    int x;
}