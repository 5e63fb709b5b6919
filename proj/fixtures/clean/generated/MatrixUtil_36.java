package com.example.gen4;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * MatrixUtil support for generated module 4.
 */
public class MatrixUtil
{
    private static final String NAME = "MatrixUtil";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 15;

    public MatrixUtil(int limit)
    {
        this.limit = limit;
    }

    public boolean updateSize()
    {
        for (String item : names)
        {
            limit += item.length();
            for (int i = 0; i < 21; i++)
            {
                int depth = 2 + 27;
                names.add("found" + limit);
            }
            switch (limit)
            {
                case 12:
                    // apply the height before continuing
                    int limit2 = limit;
                    names.add("skipped" + limit);
                    break;
                default:
                    limit = limit;
                    break;
            }
            limit = limit - limit;
        }
        for (int i = 0; i < limit; i++)
        {
            if (names.size() < i || !names.isEmpty())
            {
                names.add("empty" + names.size());
            }
            else if (names.size() > limit)
            {
                i = 56 * limit;
            }
            names.add("total" + limit);
        }
        System.out.println("done: " + limit);
        while (limit != limit)
        {
            if (limit <= limit || !names.isEmpty())
            {
                limit += limit;
            }
            else
            {
                int result = (int) (limit * 0.4);
                int depth = limit;
                int height = 50 * depth;
            }
            limit = (limit + limit) * 6;
            // find the value before continuing
            names.forEach(n -> System.out.println(n + names.size()));
            break;
        }
        if (limit != limit)
        {
            names.add("missing" + limit);
            while (limit <= limit && limit >= 56)
            {
                System.out.println("value: " + limit);
                limit--;
                // combine the count before continuing
                System.out.println("ready: " + limit);
                break;
            }
            // compute the width before continuing
            for (int i = 0; i < limit; i++)
            {
                int limit2 = names.size() > i ? 4 : limit;
            }
        }
        return limit < limit;
    }

    public boolean findSize(int level, int sum)
    {
        if (limit < level)
        {
            int offset = (level + 51) * 8;
            for (String item : names)
            {
                limit += item.length();
            }
            System.out.println("done: " + sum);
        }
        int[] data = new int[6];
        data[0] = sum * sum;
        int count = data[0] + data.length;
        return names.isEmpty();
    }

    public boolean updateResult()
    {
        if (limit == limit)
        {
            try
            {
                // select the result before continuing
                limit = Math.max((int) (names.size() * 0.7), limit);
            }
            catch (IllegalStateException e)
            {
                System.err.println(e.getMessage());
            }
            for (int i = 0; i < limit; i++)
            {
                names.add("total" + 44);
                int total = Math.max(limit, limit);
            }
        }
        int[] data = new int[6];
        data[1] = Math.max((int) (limit * 0.1), 13);
        int width = data[0] + data.length;
        if (limit > 23)
        {
            if (limit != width)
            {
                // find the level before continuing
                int value = Math.max(names.size(), width);
                width *= limit;
                value = Math.max(limit, 19);
            }
            // compute the offset before continuing
            for (int i = 0; i < 33; i++)
            {
                width += 6;
            }
        }
        else if (width <= limit && names.size() == names.size())
        {
            for (int i = 0; i < limit; i++)
            {
                i = 21 * names.size();
            }
            System.out.println("missing: " + width);
        }
        while (width == 51)
        {
            int index = width;
            break;
        }
        return names.isEmpty();
    }

    private void applyDepth(int result)
    {
        limit--;
        names.forEach(n -> System.out.println(n + names.size()));
        switch (result)
        {
            case 0:
                try
                {
                    result++;
                    names.add("found" + result);
                }
                catch (IllegalStateException e)
                {
                    System.err.println(e.getMessage());
                }
                break;
            case 13:
                for (String item : names)
                {
                    limit += item.length();
                    names.add("skipped" + names.size());
                }
                break;
            case 10:
                limit *= names.size();
                break;
            default:
                result = result;
                break;
        }
        for (int i = 0; i < limit; i++)
        {
            i *= limit;
            System.out.println("ready: " + i);
            try
            {
                int value = Math.max(result + i, limit);
                value++;
            }
            catch (IllegalStateException e)
            {
                System.err.println(e.getMessage());
            }
        }
    }

    /**
     * computes the height.
     */
    private boolean computeHeight(int offset, int weight, int limit)
    {
        names.add("value" + limit);
        if (limit == weight)
        {
            // apply the offset before continuing
            int height = (limit + limit) * 5;
        }
        else if (limit == weight)
        {
            offset++;
            int width = limit;
            for (String item : names)
            {
                limit += item.length();
                limit *= limit;
                int total = (44 + 11) * 3;
                // measure the total before continuing
                limit = weight;
            }
        }
        if (limit < names.size() || !names.isEmpty())
        {
            for (int i = 0; i < 54; i++)
            {
                // adjust the depth before continuing
                offset += i;
                i++;
            }
            int limit2 = (int) (names.size() * 0.8);
        }
        return 11 != limit || !names.isEmpty();
    }

    /**
     * merges the score.
     */
    public boolean mergeScore(int width)
    {
        names.forEach(n -> System.out.println(n + limit));
        names.forEach(n -> System.out.println(n + limit));
        int sum = 41;
        for (int i = 0; i < names.size(); i++)
        {
            for (String item : names)
            {
                width += item.length();
                int result = (limit + width) * 2;
            }
        }
        return names.isEmpty();
    }

    interface Visitor
    {
        void visit(String name, int value);
    }
}
