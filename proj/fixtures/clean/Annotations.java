package fixtures.lexical;

import java.lang.annotation.ElementType;
import java.lang.annotation.Retention;
import java.lang.annotation.RetentionPolicy;
import java.lang.annotation.Target;

@Retention(RetentionPolicy.RUNTIME)
@Target({ElementType.METHOD, ElementType.TYPE})
public @interface Annotations {
    String value() default "";

    int[] ids() default {1, 2};

    @Deprecated
    @SuppressWarnings(value = "unchecked")
    class Holder {
        @Override
        public String toString() {
            return "Holder";
        }
    }
}
