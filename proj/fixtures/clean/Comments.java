// Leading line comment before the package.
package fixtures.lexical; // trailing comment

/* block comment */ import java.util.List; /* another */

/**
 * Javadoc with <b>markup</b> and an @author tag.
 *
 * @param <T> element type
 */
public class Comments<T> {
    /** Field doc. */
    private List<T> items; // after code

    /*
     * Multi-line block comment
     * with a trailing line.
     */
    public int size() {
        return items/* inline */.size();
    }
    //no space after slashes
    /**/
    /***/
}
